// The double point `O_0^2` as a quotient of `O^r`, and its kernel Homs.
//
// With `K = m_0^2 (+) O^{r-2}` the kernel of `O^r ->> O_0^2`, prints
// `dim Hom(K, O_0^2)` (the tangent space), `dim Hom(K, O_0)`, and compares
// the first with `r n - hom(T, T) + ext^1(T, T)`.

use nested_quot::linalg::rational;
use nested_quot::module::{ext1_dim, hom_dim, FiniteModule};
use nested_quot::quot::{hom_from_kernel_dim, tangent_dim, QuotPoint};

pub fn run_example() -> nested_quot::Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for m in 2..=3 {
        for r in 2..=3 {
            let fat = QuotPoint::origin_points(m, r, 2)?;
            let t = fat.module();
            let rep = tangent_dim(&fat)?;
            let to_residue = hom_from_kernel_dim(&fat, &FiniteModule::point(&vec![rational(0); m]))?;
            let euler = r * t.dim() - hom_dim(t, t)? + ext1_dim(t, t)?;
            println!(
                "m={m} r={r}: tangent {} (expected {}), Hom(K, O_0) = {to_residue}, r n - hom + ext1 = {euler}",
                rep.tangent_dim, rep.expected_dim
            );
            assert_eq!(rep.tangent_dim, euler);
            out.push((m, r, rep.tangent_dim));
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
