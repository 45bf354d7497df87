// Monomial ideals of finite colength and the fixed points built from them.

use nested_quot::classify::{enumerate_fixed_points, enumerate_staircases};

pub fn run_example() -> nested_quot::Result<Vec<usize>> {
    let planar: Vec<usize> = (0..=8).map(|n| enumerate_staircases(2, n).len()).collect();
    let solid: Vec<usize> = (0..=5).map(|n| enumerate_staircases(3, n).len()).collect();
    println!("partitions p(n), n <= 8:        {planar:?}");
    println!("plane partitions, n <= 5:       {solid:?}");
    for s in enumerate_staircases(3, 3) {
        println!("  {}", s.label());
    }
    println!("nested fixed points of (m, r, lengths) = (2, 2, [1, 2]):");
    for fp in enumerate_fixed_points(2, 2, &[1, 2])? {
        let z = fp.to_nested_point()?;
        println!("  {:<28} lengths {:?}", fp.identifier(), z.lengths());
    }
    Ok(planar)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
