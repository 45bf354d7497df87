//! Jet-truncated kernels `K = ker(O^r ->> T)` and homomorphisms out of them.
//!
//! For a point supported at the origin with Loewy length `a`, and a target
//! of Loewy length `a'`, every map `K -> T'` kills `m^{a'} K`, which
//! contains `m^{a + a'} O^r`. So `Hom_O(K, T')` equals `Hom_B(Q, T')` with
//! `Q = K / m^{a'} K` computed inside `B^r`, `B = O/m^N`, for any
//! `N >= a + a'`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jet::{monomials_of_degree, JetAlgebra};
use crate::linalg::{Echelon, QMatrix, Rational, SparseVec};
use crate::module::{intertwiners, FiniteModule};
use crate::quot::point::QuotPoint;

/// Smallest truncation order for which the Hom computation is exact.
pub fn required_order(point_loewy: usize, target_loewy: usize) -> usize {
    (point_loewy + target_loewy).max(1)
}

/// `Q = K / m^{a'} K` for a local framed point, realized inside `B^r`.
pub struct KernelPresentation {
    jet_dim: usize,
    rank: usize,
    echelon: Echelon,
    // echelon rows [0, quotient_start) span m^{a'} K; the rest map onto a basis of Q
    quotient_start: usize,
    quotient: FiniteModule,
}

impl KernelPresentation {
    pub fn new(point: &QuotPoint, jet: &JetAlgebra, target_loewy: usize) -> Result<Self> {
        let m = point.num_vars();
        if jet.num_vars() != m {
            return Err(Error::DimensionMismatch(format!(
                "point over {m} variables, jet algebra over {}",
                jet.num_vars()
            )));
        }
        let t = point.module();
        let a = t.loewy_length()?;
        let needed = required_order(a, target_loewy);
        if jet.order() < needed {
            return Err(Error::TruncationTooSmall {
                required: needed,
                got: jet.order(),
            });
        }
        let r = point.rank();
        let jd = jet.dim();
        let mut echelon = Echelon::new(r * jd);

        if target_loewy == 0 {
            return Ok(KernelPresentation {
                jet_dim: jd,
                rank: r,
                echelon,
                quotient_start: 0,
                quotient: FiniteModule::zero(m),
            });
        }

        let generators = kernel_generators(point, jet, a)?;

        // m^{a'} K: products of the generators by monomials of degree a', closed under x_i.
        let mut queue: Vec<SparseVec> = Vec::new();
        for beta in monomials_of_degree(m, target_loewy as u32) {
            for g in &generators {
                let v = multiply_monomial(jet, jd, g, &beta);
                if !v.is_empty() {
                    if let Some(k) = echelon.insert(&v) {
                        queue.push(echelon.row(k).clone());
                    }
                }
            }
        }
        close_under_variables(jet, jd, &mut echelon, queue);
        let quotient_start = echelon.rank();

        // K itself: generators, closed under x_i, modulo the rows above.
        let mut queue = Vec::new();
        for g in &generators {
            if let Some(k) = echelon.insert(g) {
                queue.push(echelon.row(k).clone());
            }
        }
        close_under_variables(jet, jd, &mut echelon, queue);

        let q = echelon.rank() - quotient_start;
        let mut actions = vec![QMatrix::zeros(q, q); m];
        for col in 0..q {
            let row = echelon.row(quotient_start + col).clone();
            for (var, action) in actions.iter_mut().enumerate() {
                let img = multiply_var(jet, jd, &row, var);
                let (coeffs, rem) = echelon.reduce(&img);
                debug_assert!(rem.is_empty(), "kernel is closed under x_i");
                for (k, c) in coeffs {
                    if k >= quotient_start {
                        action[(k - quotient_start, col)] = c;
                    }
                }
            }
        }
        Ok(KernelPresentation {
            jet_dim: jd,
            rank: r,
            echelon,
            quotient_start,
            quotient: FiniteModule::new_unchecked(actions)?,
        })
    }

    /// The module `K / m^{a'} K`.
    pub fn quotient(&self) -> &FiniteModule {
        &self.quotient
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Dimension `r * dim B` of the ambient free module.
    pub fn ambient_dim(&self) -> usize {
        self.rank * self.jet_dim
    }

    /// Elements of the truncated kernel whose classes form the basis of `Q`.
    pub fn lifts(&self) -> Vec<SparseVec> {
        (self.quotient_start..self.echelon.rank())
            .map(|k| self.echelon.row(k).clone())
            .collect()
    }

    /// Coordinates in `Q` of an element of the truncated kernel, or `None`
    /// when `v` is not in the kernel.
    pub fn coordinates(&mut self, v: &SparseVec) -> Option<Vec<Rational>> {
        let (coeffs, rem) = self.echelon.reduce(v);
        if !rem.is_empty() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.quotient_dim()];
        for (k, c) in coeffs {
            if k >= self.quotient_start {
                out[k - self.quotient_start] = c;
            }
        }
        Some(out)
    }
}

/// Generators of the truncated kernel as a `B`-module: the kernel of
/// `O^r -> T` restricted to degrees below `a`, plus every monomial of degree `a`.
fn kernel_generators(point: &QuotPoint, jet: &JetAlgebra, a: usize) -> Result<Vec<SparseVec>> {
    let t = point.module();
    let n = t.dim();
    let jd = jet.dim();
    let r = point.rank();
    let low: Vec<usize> = (0..jd).filter(|&k| jet.degree(k) < a).collect();

    // images[j][k] = x^{basis[k]} v_j for low-degree monomials
    let mut columns: Vec<(usize, Vec<Rational>)> = Vec::with_capacity(r * low.len());
    for (j, v) in point.framing().iter().enumerate() {
        let mut images: Vec<Option<Vec<Rational>>> = vec![None; jd];
        for &k in &low {
            let e = &jet.basis()[k];
            let img = match e.iter().position(|&x| x > 0) {
                None => v.clone(),
                Some(var) => {
                    let mut prev = e.clone();
                    prev[var] -= 1;
                    let pk = jet.index_of(&prev).expect("lower monomial present");
                    let base = images[pk].as_ref().expect("lower degree computed first");
                    t.action(var).mul_vec(base)
                }
            };
            images[k] = Some(img);
        }
        for &k in &low {
            columns.push((j * jd + k, images[k].take().expect("computed")));
        }
    }

    let mut gens = Vec::new();
    if n > 0 && !columns.is_empty() {
        let mut eval = Echelon::new(columns.len());
        for row in 0..n {
            let v: Vec<Rational> = columns.iter().map(|(_, c)| c[row].clone()).collect();
            eval.insert_dense(&v);
        }
        for kv in eval.null_space() {
            let sv: SparseVec = kv
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (columns[i].0, x))
                .collect();
            gens.push(sv);
        }
    } else {
        for (idx, _) in &columns {
            gens.push(vec![(*idx, Rational::from_integer(1.into()))]);
        }
    }
    for j in 0..r {
        for k in 0..jd {
            if jet.degree(k) == a {
                gens.push(vec![(j * jd + k, Rational::from_integer(1.into()))]);
            }
        }
    }
    Ok(gens)
}

fn multiply_var(jet: &JetAlgebra, jd: usize, v: &SparseVec, var: usize) -> SparseVec {
    let mut out: SparseVec = v
        .iter()
        .filter_map(|(idx, x)| {
            let (j, k) = (idx / jd, idx % jd);
            jet.shift(var, k).map(|t| (j * jd + t, x.clone()))
        })
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

fn multiply_monomial(jet: &JetAlgebra, jd: usize, v: &SparseVec, beta: &[u32]) -> SparseVec {
    let mut out = v.clone();
    for (var, &e) in beta.iter().enumerate() {
        for _ in 0..e {
            out = multiply_var(jet, jd, &out, var);
        }
    }
    out
}

fn close_under_variables(jet: &JetAlgebra, jd: usize, echelon: &mut Echelon, mut queue: Vec<SparseVec>) {
    while let Some(v) = queue.pop() {
        for var in 0..jet.num_vars() {
            let w = multiply_var(jet, jd, &v, var);
            if w.is_empty() {
                continue;
            }
            if let Some(k) = echelon.insert(&w) {
                queue.push(echelon.row(k).clone());
            }
        }
    }
}

/// Basis of `Hom_O(K, T')` for a point and target both supported at the
/// origin, as maps `K / m^{a'} K -> T'`.
#[derive(Clone, Debug)]
pub struct KernelHoms {
    pub quotient: FiniteModule,
    pub maps: Vec<QMatrix>,
}

impl KernelHoms {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

/// `Hom_O(K, T')` through the jet algebra `jet`; both modules must be
/// supported at the origin and `jet.order()` must be at least the sum of
/// their Loewy lengths.
pub fn hom_from_kernel(point: &QuotPoint, target: &FiniteModule, jet: &JetAlgebra) -> Result<KernelHoms> {
    if target.num_vars() != point.num_vars() {
        return Err(Error::DimensionMismatch(format!(
            "point over {} variables, target over {}",
            point.num_vars(),
            target.num_vars()
        )));
    }
    let a2 = target.loewy_length()?;
    let pres = KernelPresentation::new(point, jet, a2)?;
    let maps = intertwiners(pres.quotient().actions(), target.actions());
    Ok(KernelHoms {
        quotient: pres.quotient().clone(),
        maps,
    })
}

/// `dim Hom_O(K, T')` for arbitrary rational supports: both modules are
/// split by support and each local piece goes through its own minimal jet
/// algebra.
pub fn hom_from_kernel_dim(point: &QuotPoint, target: &FiniteModule) -> Result<usize> {
    hom_from_kernel_dim_with(point, target, 0)
}

/// As [`hom_from_kernel_dim`], with every truncation order raised by `extra`.
pub fn hom_from_kernel_dim_with(point: &QuotPoint, target: &FiniteModule, extra: usize) -> Result<usize> {
    let chain = crate::quot::NestedQuotPoint::single(point.clone());
    let local_points = localize_against(&chain, target)?;
    let mut total = 0;
    for (p_local, t_local) in local_points {
        let a = p_local.module().loewy_length()?;
        let a2 = t_local.loewy_length()?;
        let jet = JetAlgebra::new(point.num_vars(), required_order(a, a2) + extra)?;
        total += hom_from_kernel(&p_local, &t_local, &jet)?.dim();
    }
    Ok(total)
}

/// Pairs each support point of `target` with the localized framed point
/// there (of length zero when the point is outside the support of `T`).
fn localize_against(chain: &crate::quot::NestedQuotPoint, target: &FiniteModule) -> Result<Vec<(QuotPoint, FiniteModule)>> {
    use crate::module::SupportDecomposition;
    let p = chain.top();
    let dec_t = SupportDecomposition::new(p.module())?;
    let dec_target = SupportDecomposition::new(target)?;
    let mut out = Vec::new();
    for (idx, piece) in dec_target.pieces().iter().enumerate() {
        let t_local = dec_target.local_module(target, idx)?;
        let p_local = match dec_t.find(&piece.point) {
            Some(i) => {
                let module = dec_t.local_module(p.module(), i)?;
                let framing = p.framing().iter().map(|v| dec_t.components(v).swap_remove(i)).collect();
                QuotPoint::new_unchecked(module, framing)?
            }
            None => QuotPoint::new_unchecked(FiniteModule::zero(p.num_vars()), vec![Vec::new(); p.rank()])?,
        };
        out.push((p_local, t_local));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_residue_field() {
        // r = 1, T = O_0, m = 2: K is m_0; modulo m_0 K it is spanned by x, y.
        let p = QuotPoint::origin_points(2, 1, 1).unwrap();
        let jet = JetAlgebra::new(2, 2).unwrap();
        let pres = KernelPresentation::new(&p, &jet, 1).unwrap();
        assert_eq!(pres.quotient_dim(), 2);
    }

    #[test]
    fn truncation_guard() {
        let p = QuotPoint::origin_points(2, 1, 1).unwrap();
        let jet = JetAlgebra::new(2, 1).unwrap();
        assert!(matches!(
            KernelPresentation::new(&p, &jet, 1),
            Err(Error::TruncationTooSmall { required: 2, got: 1 })
        ));
    }

    #[test]
    fn kernel_hom_counts_at_small_rank() {
        for m in 2..=3 {
            for r in 2..=3 {
                let one = QuotPoint::origin_points(m, r, 1).unwrap();
                let two = QuotPoint::origin_points(m, r, 2).unwrap();
                let o1 = FiniteModule::origin_points(m, 1);
                let o2 = FiniteModule::origin_points(m, 2);
                let jet = JetAlgebra::new(m, 2).unwrap();
                assert_eq!(hom_from_kernel(&one, &o1, &jet).unwrap().dim(), m + r - 1);
                assert_eq!(hom_from_kernel(&two, &o2, &jet).unwrap().dim(), 4 * m + 2 * (r - 2));
                assert_eq!(hom_from_kernel(&two, &o1, &jet).unwrap().dim(), 2 * m + r - 2);
            }
        }
    }

    #[test]
    fn lifts_have_coordinates() {
        let p = QuotPoint::origin_points(2, 2, 2).unwrap();
        let jet = JetAlgebra::new(2, 3).unwrap();
        let mut pres = KernelPresentation::new(&p, &jet, 1).unwrap();
        for (i, l) in pres.lifts().iter().enumerate() {
            let c = pres.coordinates(l).unwrap();
            for (j, x) in c.iter().enumerate() {
                assert_eq!(x.is_zero(), i != j);
            }
        }
        // the constant in slot 0 maps to e_1, not in the kernel
        let one = vec![(0usize, Rational::from_integer(1.into()))];
        assert!(pres.coordinates(&one).is_none());
    }
}
