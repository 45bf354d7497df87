//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(classify_grid, "classify_grid.rs");
example!(fat_point, "fat_point.rs");
example!(fixed_point_sweep, "fixed_point_sweep.rs");
example!(ncquot_gauge, "ncquot_gauge.rs");
example!(nested_witness, "nested_witness.rs");
example!(point_file_roundtrip, "point_file_roundtrip.rs");
example!(staircases, "staircases.rs");

#[test]
fn classify_grid_runs() {
    assert_eq!(classify_grid::run_example().unwrap().len(), 36);
}

#[test]
fn fat_point_runs() {
    let counts = fat_point::run_example().unwrap();
    assert_eq!(counts, vec![(2, 2, 8), (2, 3, 10), (3, 2, 12), (3, 3, 14)]);
}

#[test]
fn fixed_point_sweep_runs() {
    assert_eq!(fixed_point_sweep::run_example(2, 2, 3).unwrap(), 0);
}

#[test]
fn ncquot_gauge_runs() {
    let g = ncquot_gauge::run_example().unwrap();
    assert_eq!(g, nested_quot::linalg::QMatrix::from_i64(3, 3, &[1, 2, 0, 0, 1, -1, 1, 0, 1]));
}

#[test]
fn nested_witness_runs() {
    let dims = nested_witness::run_example().unwrap();
    assert!(dims.iter().all(|(t, e)| t > e));
    let tangents: Vec<usize> = dims.iter().map(|d| d.0).collect();
    assert_eq!((tangents[0], tangents[1], tangents[4]), (8, 7, 18));
}

#[test]
fn point_file_roundtrip_runs() {
    assert!(point_file_roundtrip::run_example().unwrap().contains("1/2"));
}

#[test]
fn staircases_runs() {
    assert_eq!(staircases::run_example().unwrap(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
}
