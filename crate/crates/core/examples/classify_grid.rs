// Print the smoothness table for small `(m, r, lengths)`.

use nested_quot::classify::classify;
use nested_quot::quot::expdim;

pub fn run_example() -> nested_quot::Result<Vec<String>> {
    let tuples: [&[usize]; 6] = [&[1], &[3], &[4], &[1, 2], &[1, 3], &[1, 2, 3]];
    let mut rows = Vec::new();
    println!("{:>2} {:>2}  {:<10} {:<9} {:<22} expdim", "m", "r", "lengths", "verdict", "case");
    for m in 1..=3 {
        for r in 1..=2 {
            for n in tuples {
                let v = classify(m, r, n)?;
                let row = format!(
                    "{m:>2} {r:>2}  {:<10} {:<9} {:<22} {}",
                    format!("{n:?}"),
                    if v.smooth { "smooth" } else { "singular" },
                    v.case_label.to_string(),
                    expdim(m, r, &v.normalized_n)?
                );
                println!("{row}");
                rows.push(row);
            }
        }
    }
    // zeros and repeated lengths are dropped first
    let v = classify(7, 9, &[0, 1, 1])?;
    println!("(7, 9, [0, 1, 1]) normalizes to {:?}: {}", v.normalized_n, v.case_label);
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
