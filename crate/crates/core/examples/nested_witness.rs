// Singular witnesses and the size of the map whose kernel is the tangent space.

use nested_quot::classify::witness_singular;
use nested_quot::point_file::write_nested;
use nested_quot::quot::nested_tangent_dim;

pub fn run_example() -> nested_quot::Result<Vec<(usize, usize)>> {
    let cases: [(usize, usize, &[usize]); 5] =
        [(2, 2, &[2]), (2, 2, &[1, 2]), (3, 2, &[2, 3]), (2, 3, &[4]), (3, 1, &[4])];
    let mut tangents = Vec::new();
    for (m, r, n) in cases {
        let z = witness_singular(m, r, n)?;
        let rep = nested_tangent_dim(&z)?;
        println!(
            "m={m} r={r} n={n:?}: tangent {} > expected {}, Delta is {} x {}, support at {} points",
            rep.tangent_dim,
            rep.expected_dim,
            rep.delta_target,
            rep.delta_domain,
            z.support()?.len()
        );
        tangents.push((rep.tangent_dim, rep.expected_dim));
    }
    let z = witness_singular(2, 2, &[1, 2])?;
    println!("\nthe (1, 2) witness as a point file:\n{}", write_nested(&z));
    Ok(tangents)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
