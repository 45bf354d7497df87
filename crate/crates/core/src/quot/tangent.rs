//! Tangent spaces `T_z = ker(Delta_z)` of nested Quot schemes.
//!
//! `Delta_z : (+)_i Hom(K_i, T_i) -> (+)_i Hom(K_{i+1}, T_i)` is
//! `(phi_i) |-> (phi_i|K_{i+1} - pi_i . phi_{i+1})_i`, using `K_{i+1} ⊆ K_i`.

use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::jet::JetAlgebra;
use crate::linalg::{to_sparse, Echelon, QMatrix, Rational};
use crate::module::intertwiners;
use crate::quot::kernel::{required_order, KernelPresentation};
use crate::quot::point::{NestedQuotPoint, QuotPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    SmoothHere,
    SingularHere,
    Inconclusive,
}

impl Verdict {
    pub fn from_dims(tangent: usize, expected: usize) -> Self {
        use std::cmp::Ordering::*;
        match tangent.cmp(&expected) {
            Greater => Verdict::SingularHere,
            Equal => Verdict::SmoothHere,
            Less => Verdict::Inconclusive,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::SmoothHere => "SmoothHere",
            Verdict::SingularHere => "SingularHere",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub tangent_dim: usize,
    pub expected_dim: usize,
    pub verdict: Verdict,
    /// Sizes of `Delta_z`: total Hom-space dimension of source and target.
    pub delta_domain: usize,
    pub delta_target: usize,
}

/// `n_d (m + r - 1)`.
pub fn expdim(m: usize, r: usize, lengths: &[usize]) -> Result<usize> {
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidTuple(format!("{lengths:?} is not non-decreasing")));
    }
    match lengths.last() {
        Some(&nd) if nd >= 1 => Ok(nd * (m + r - 1)),
        _ => Err(Error::InvalidTuple("expected dimension needs n_d >= 1".into())),
    }
}

/// The map `Delta_z` on a chain supported at the origin, with its pieces.
#[derive(Clone, Debug)]
pub struct LocalDelta {
    /// `dim Hom(K_i, T_i)` per level.
    pub domain_dims: Vec<usize>,
    /// `dim Hom(K_{i+1}, T_i)` per consecutive pair.
    pub target_dims: Vec<usize>,
    pub matrix: QMatrix,
}

impl LocalDelta {
    pub fn kernel_dim(&self) -> usize {
        self.matrix.cols() - self.matrix.rank()
    }
}

/// Minimal truncation order for a chain supported at the origin.
pub fn chain_order(z: &NestedQuotPoint) -> Result<usize> {
    let a = z.top().module().loewy_length()?;
    Ok(required_order(a, a))
}

/// Matrix of `Delta_z` for a chain supported at the origin.
///
/// Columns follow the bases of `Hom(K_i, T_i)`; rows follow an echelon basis
/// of each `Hom(K_{i+1}, T_i)`.
pub fn delta_matrix(z: &NestedQuotPoint, jet: &JetAlgebra) -> Result<QMatrix> {
    Ok(local_delta(z, jet)?.matrix)
}

pub fn local_delta(z: &NestedQuotPoint, jet: &JetAlgebra) -> Result<LocalDelta> {
    let d = z.depth();
    let levels = z.levels();
    let loewy = levels
        .iter()
        .map(|l| l.module().loewy_length())
        .collect::<Result<Vec<_>>>()?;

    let mut pres = Vec::with_capacity(d);
    let mut homs = Vec::with_capacity(d);
    for (level, &a) in levels.iter().zip(&loewy) {
        let p = KernelPresentation::new(level, jet, a)?;
        homs.push(intertwiners(p.quotient().actions(), level.module().actions()));
        pres.push(p);
    }
    let domain_dims: Vec<usize> = homs.iter().map(Vec::len).collect();
    let col_offset: Vec<usize> = domain_dims
        .iter()
        .scan(0, |acc, &h| {
            let o = *acc;
            *acc += h;
            Some(o)
        })
        .collect();
    let ncols: usize = domain_dims.iter().sum();

    let mut blocks: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(d.saturating_sub(1));
    let mut target_dims = Vec::with_capacity(d.saturating_sub(1));
    for i in 0..d.saturating_sub(1) {
        let lower = &levels[i];
        let n_lower = lower.length();
        // Hom(K_{i+1}, T_i), via K_{i+1} / m^{a_i} K_{i+1}
        let cross = KernelPresentation::new(&levels[i + 1], jet, loewy[i])?;
        let targets = intertwiners(cross.quotient().actions(), lower.module().actions());
        let lifts = cross.lifts();
        let q = lifts.len();

        let mut in_lower = Vec::with_capacity(q);
        let mut in_upper = Vec::with_capacity(q);
        for l in &lifts {
            in_lower.push(pres[i].coordinates(l).ok_or_else(|| {
                Error::InvalidPoint(format!("kernel of level {} is not contained in kernel of level {}", i + 2, i + 1))
            })?);
            in_upper.push(pres[i + 1].coordinates(l).expect("lift lies in its own kernel"));
        }
        let c_lower = QMatrix::from_columns(pres[i].quotient_dim(), &in_lower)?;
        let c_upper = QMatrix::from_columns(pres[i + 1].quotient_dim(), &in_upper)?;

        // Echelon basis of the target Hom-space, in "values on lifts" coordinates.
        let mut target_basis = Echelon::new(n_lower * q);
        for t in &targets {
            target_basis.insert(&to_sparse(t.entries()));
        }
        let g = target_basis.rank();
        let mut block = vec![vec![Rational::from_integer(0.into()); ncols]; g];
        let mut put = |values: QMatrix, col: usize, sign: i64, basis: &mut Echelon| -> Result<()> {
            let (coeffs, rem) = basis.reduce(&to_sparse(values.entries()));
            if !rem.is_empty() {
                return Err(Error::InvalidPoint("restricted map does not factor through the truncation".into()));
            }
            for (k, c) in coeffs {
                block[k][col] += c * Rational::from_integer(sign.into());
            }
            Ok(())
        };
        for (k, phi) in homs[i].iter().enumerate() {
            put(phi * &c_lower, col_offset[i] + k, 1, &mut target_basis)?;
        }
        let pi = z.maps()[i].matrix();
        for (k, phi) in homs[i + 1].iter().enumerate() {
            put(&(pi * phi) * &c_upper, col_offset[i + 1] + k, -1, &mut target_basis)?;
        }
        target_dims.push(g);
        blocks.push(block);
    }
    let rows: Vec<Vec<Rational>> = blocks.into_iter().flatten().collect();
    let matrix = QMatrix::from_rows(ncols, &rows)?;
    Ok(LocalDelta {
        domain_dims,
        target_dims,
        matrix,
    })
}

/// Tangent dimension of the nested Quot scheme at `z`, with any rational support.
pub fn nested_tangent_dim(z: &NestedQuotPoint) -> Result<TangentReport> {
    nested_tangent_dim_with(z, 0)
}

/// As [`nested_tangent_dim`], with every truncation order raised by `extra`.
pub fn nested_tangent_dim_with(z: &NestedQuotPoint, extra: usize) -> Result<TangentReport> {
    tangent_report(z, extra, &Bounds::default())
}

/// As [`nested_tangent_dim`], refusing jet algebras larger than `bounds` allows.
pub fn nested_tangent_dim_bounded(z: &NestedQuotPoint, bounds: &Bounds) -> Result<TangentReport> {
    tangent_report(z, 0, bounds)
}

fn tangent_report(z: &NestedQuotPoint, extra: usize, bounds: &Bounds) -> Result<TangentReport> {
    let expected = expdim(z.num_vars(), z.rank(), &z.lengths())?;
    let mut tangent = 0;
    let mut domain = 0;
    let mut target = 0;
    for (_, local) in z.localize()? {
        let jet = JetAlgebra::with_bounds(z.num_vars(), chain_order(&local)? + extra, bounds)?;
        let delta = local_delta(&local, &jet)?;
        tangent += delta.kernel_dim();
        domain += delta.matrix.cols();
        target += delta.matrix.rows();
    }
    Ok(TangentReport {
        tangent_dim: tangent,
        expected_dim: expected,
        verdict: Verdict::from_dims(tangent, expected),
        delta_domain: domain,
        delta_target: target,
    })
}

/// Tangent dimension of `Quot(O^r, n)` at a single framed point: `dim Hom(K, T)`.
pub fn tangent_dim(p: &QuotPoint) -> Result<TangentReport> {
    nested_tangent_dim(&NestedQuotPoint::single(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;
    use crate::module::FiniteModule;

    #[test]
    fn expdim_examples() {
        assert_eq!(expdim(2, 2, &[2]).unwrap(), 6);
        assert_eq!(expdim(2, 2, &[1, 2]).unwrap(), 6);
        assert_eq!(expdim(3, 1, &[3]).unwrap(), 9);
        assert!(expdim(2, 2, &[2, 1]).is_err());
        assert!(expdim(2, 2, &[0]).is_err());
    }

    #[test]
    fn simple_point_is_smooth() {
        for m in 1..=3 {
            for r in 1..=3 {
                let p = QuotPoint::simple_point(&vec![rational(0); m], r).unwrap();
                let rep = tangent_dim(&p).unwrap();
                assert_eq!(rep.tangent_dim, m + r - 1);
                assert_eq!(rep.verdict, Verdict::SmoothHere);
            }
        }
    }

    #[test]
    fn fat_point_of_rank_two() {
        let p = QuotPoint::origin_points(2, 2, 2).unwrap();
        let rep = tangent_dim(&p).unwrap();
        assert_eq!((rep.tangent_dim, rep.expected_dim), (8, 6));
        assert_eq!(rep.verdict, Verdict::SingularHere);
    }

    #[test]
    fn curvilinear_length_two() {
        // T = O/(y, x^2), basis 1, x
        let x = QMatrix::from_i64(2, 2, &[0, 0, 1, 0]);
        let y = QMatrix::zeros(2, 2);
        let t = FiniteModule::new(vec![x, y]).unwrap();
        let p = QuotPoint::new(t, vec![vec![rational(1), rational(0)]]).unwrap();
        let rep = tangent_dim(&p).unwrap();
        assert_eq!((rep.tangent_dim, rep.expected_dim), (4, 4));
        assert_eq!(rep.verdict, Verdict::SmoothHere);
    }

    #[test]
    fn depth_one_has_empty_delta() {
        let z = NestedQuotPoint::single(QuotPoint::origin_points(2, 2, 2).unwrap());
        let jet = JetAlgebra::new(2, 2).unwrap();
        let d = delta_matrix(&z, &jet).unwrap();
        assert_eq!((d.rows(), d.cols()), (0, 8));
    }
}
