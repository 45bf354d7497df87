// Sweep torus-fixed points and compare with the classifier.
//
// `cargo run --release --example fixed_point_sweep [max_m] [max_r] [max_top]`
// (defaults 3 3 3) prints one line per `(m, r, lengths)` cell with strictly
// increasing lengths of depth at most three.

use std::time::Instant;

use nested_quot::bounds::Bounds;
use nested_quot::classify::verify_smoothness;

fn increasing_tuples(max_top: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for c in 1..=max_top {
        out.push(vec![c]);
        for b in 1..c {
            out.push(vec![b, c]);
            for a in 1..b {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Returns the number of cells where the sweep and the classifier disagree.
pub fn run_example(max_m: usize, max_r: usize, max_top: usize) -> nested_quot::Result<usize> {
    let bounds = Bounds::default();
    let start = Instant::now();
    let mut disagreements = 0;
    for m in 1..=max_m {
        for r in 1..=max_r {
            for n in increasing_tuples(max_top) {
                let rep = verify_smoothness(m, r, &n, &bounds)?;
                if !rep.agrees {
                    disagreements += 1;
                }
                println!(
                    "m={m} r={r} n={n:?}: {} ({}), {} fixed points, max tangent {} vs {}{}",
                    rep.outcome,
                    rep.classification.case_label,
                    rep.fixed_points(),
                    rep.max_tangent_dim,
                    rep.expected_dim,
                    if rep.agrees { "" } else { "  DISAGREES" },
                );
            }
        }
    }
    println!("{disagreements} disagreements in {:.2?}", start.elapsed());
    Ok(disagreements)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let get = |i: usize| args.get(i).copied().unwrap_or(3);
    run_example(get(0), get(1), get(2))?;
    Ok(())
}
