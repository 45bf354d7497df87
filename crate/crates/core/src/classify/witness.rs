//! Explicit singular points for the singular cases that have a known witness.

use num_traits::{One, Zero};

use crate::classify::theorem::{classify, CaseLabel, CheahCase};
use crate::error::{Error, Result};
use crate::linalg::{rational, QMatrix, Rational};
use crate::module::FiniteModule;
use crate::quot::{nested_tangent_dim, NestedQuotPoint, QuotPoint};

/// `p_i = (i, 0, ..., 0)`.
pub fn witness_location(m: usize, i: usize) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); m];
    p[0] = rational(i as i64);
    p
}

/// `[O^r ->> O_0^2]` with `n - 2` simple points at distinct nonzero locations.
pub fn fat_point_witness(m: usize, r: usize, n: usize) -> Result<NestedQuotPoint> {
    if r < 2 || n < 2 {
        return Err(Error::Unsupported(format!("fat point witness needs r >= 2 and n >= 2, got r={r}, n={n}")));
    }
    let mut parts = vec![NestedQuotPoint::single(QuotPoint::origin_points(m, r, 2)?)];
    for i in 1..=n - 2 {
        parts.push(NestedQuotPoint::single(QuotPoint::simple_point(&witness_location(m, i), r)?));
    }
    NestedQuotPoint::direct_sum(&parts)
}

/// `[O^r ->> O_0^2 ->> O_0]` with `n - 1` constant chains at distinct nonzero locations.
pub fn nested_fat_point_witness(m: usize, r: usize, n: usize) -> Result<NestedQuotPoint> {
    if r < 2 || n < 1 {
        return Err(Error::Unsupported(format!(
            "nested fat point witness needs r >= 2 and n >= 1, got r={r}, n={n}"
        )));
    }
    let lower = QuotPoint::origin_points(m, r, 1)?;
    let upper = QuotPoint::origin_points(m, r, 2)?;
    let pi = QMatrix::from_i64(1, 2, &[1, 0]);
    let mut parts = vec![NestedQuotPoint::new(vec![lower, upper], vec![pi])?];
    for i in 1..n {
        let p = QuotPoint::simple_point(&witness_location(m, i), r)?;
        parts.push(NestedQuotPoint::constant(p, 2));
    }
    NestedQuotPoint::direct_sum(&parts)
}

/// `[O ->> O/((x_1, x_2, x_3)^2 + (x_4, ..., x_m))]`, of length 4, for `m >= 3`.
pub fn square_of_maximal_ideal_witness(m: usize) -> Result<NestedQuotPoint> {
    if m < 3 {
        return Err(Error::Unsupported(format!("needs m >= 3, got {m}")));
    }
    // basis 1, x_1, x_2, x_3
    let actions = (0..m)
        .map(|k| {
            let mut a = QMatrix::zeros(4, 4);
            if k < 3 {
                a[(k + 1, 0)] = Rational::one();
            }
            a
        })
        .collect();
    let mut v = vec![Rational::zero(); 4];
    v[0] = Rational::one();
    Ok(NestedQuotPoint::single(QuotPoint::new(FiniteModule::new(actions)?, vec![v])?))
}

/// A point at which the nested Quot scheme with data `(m, r, lengths)` has
/// tangent dimension strictly above the expected one.
///
/// Covers the two rank-at-least-two families and the length-four point in
/// three or more variables; the remaining singular cases return
/// [`Error::Unsupported`] and a smooth case returns [`Error::NotSingular`].
pub fn witness_singular(m: usize, r: usize, lengths: &[usize]) -> Result<NestedQuotPoint> {
    let verdict = classify(m, r, lengths)?;
    let n = &verdict.normalized_n;
    let z = match verdict.case_label {
        label if label.is_smooth() => return Err(Error::NotSingular),
        CaseLabel::SingularA => fat_point_witness(m, r, n[0])?,
        CaseLabel::SingularB => nested_fat_point_witness(m, r, n[0])?,
        CaseLabel::SingularCheah(CheahCase::HigherDimLong) if r == 1 && n[0] == 4 => {
            square_of_maximal_ideal_witness(m)?
        }
        label => {
            return Err(Error::Unsupported(format!(
                "no explicit witness for {label} with m={m}, r={r}, lengths {n:?}"
            )))
        }
    };
    let report = nested_tangent_dim(&z)?;
    if report.tangent_dim <= report.expected_dim {
        return Err(Error::Unsupported(format!(
            "constructed point has tangent {} <= expected {}",
            report.tangent_dim, report.expected_dim
        )));
    }
    Ok(z)
}
