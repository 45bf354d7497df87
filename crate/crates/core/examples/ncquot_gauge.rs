// Matrix data without commutation: stability, commutators, and recovering a
// change of basis from two framed presentations.

use nested_quot::linalg::{rational, QMatrix};
use nested_quot::ncquot::{commutator_defect, framed_isomorphic, nc_is_stable, ncquot_dim, to_quot_point, NCQuotPoint};

pub fn run_example() -> nested_quot::Result<QMatrix> {
    let a1 = QMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
    let a2 = QMatrix::from_i64(3, 3, &[0, 0, 0, 1, 0, 0, 0, 0, 0]);
    let v = vec![rational(0), rational(0), rational(1)];
    let p = NCQuotPoint::new(3, vec![a1, a2], vec![v])?;
    println!("stable: {}, commutator ranks: {:?}", nc_is_stable(&p), commutator_defect(&p));
    println!("as a Quot point: {}", match to_quot_point(&p) {
        Ok(_) => "yes".to_string(),
        Err(e) => e.to_string(),
    });
    println!("dimension of the smooth ambient space: {}", ncquot_dim(2, 3, 1));

    let g = QMatrix::from_i64(3, 3, &[1, 2, 0, 0, 1, -1, 1, 0, 1]);
    let q = p.gauge(&g)?;
    let found = framed_isomorphic(&p, &q).expect("gauge-equivalent data");
    println!("recovered intertwiner equals g: {}", found == g);
    Ok(found)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
