//! Tangent dimensions at every torus-fixed point, compared with the classifier.
//!
//! A fixed point with tangent above the expected dimension proves the scheme
//! singular. When every fixed point has the expected tangent dimension the
//! sweep only reports the result as consistent with smoothness.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{binomial, Bounds};
use crate::classify::fixed_points::enumerate_fixed_points_bounded;
use crate::classify::theorem::{classify, ClassificationVerdict};
use crate::error::Result;
use crate::quot::{expdim, nested_tangent_dim_bounded, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SweepOutcome {
    #[serde(rename = "SMOOTH-CONSISTENT")]
    SmoothConsistent,
    #[serde(rename = "SINGULAR-CONFIRMED")]
    SingularConfirmed,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl fmt::Display for SweepOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepOutcome::SmoothConsistent => "SMOOTH-CONSISTENT",
            SweepOutcome::SingularConfirmed => "SINGULAR-CONFIRMED",
            SweepOutcome::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointRecord {
    pub id: String,
    pub tangent_dim: usize,
    pub expected_dim: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub m: usize,
    pub r: usize,
    pub lengths: Vec<usize>,
    pub expected_dim: usize,
    pub max_tangent_dim: usize,
    pub outcome: SweepOutcome,
    pub classification: ClassificationVerdict,
    /// Whether the outcome is compatible with `classification`.
    pub agrees: bool,
    pub records: Vec<FixedPointRecord>,
}

impl SweepReport {
    pub fn fixed_points(&self) -> usize {
        self.records.len()
    }
}

/// Runs the fixed-point sweep for the canonicalized tuple of `lengths`.
pub fn verify_smoothness(m: usize, r: usize, lengths: &[usize], bounds: &Bounds) -> Result<SweepReport> {
    let classification = classify(m, r, lengths)?;
    let n = classification.normalized_n.clone();
    let expected = expdim(m, r, &n)?;
    let top = *n.last().expect("canonical tuple is nonempty");
    // Loewy length is at most n_d, so truncation order at most 2 n_d
    bounds.check_jet_dim(binomial(2 * top - 1 + m, m))?;

    let points = enumerate_fixed_points_bounded(m, r, &n, bounds)?;
    let records = points
        .par_iter()
        .map(|fp| {
            let rep = nested_tangent_dim_bounded(&fp.to_nested_point()?, bounds)?;
            Ok(FixedPointRecord {
                id: fp.identifier(),
                tangent_dim: rep.tangent_dim,
                expected_dim: rep.expected_dim,
                verdict: rep.verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let max_tangent_dim = records.iter().map(|r| r.tangent_dim).max().unwrap_or(0);
    let outcome = if max_tangent_dim > expected {
        SweepOutcome::SingularConfirmed
    } else if records.iter().all(|r| r.tangent_dim == expected) {
        SweepOutcome::SmoothConsistent
    } else {
        SweepOutcome::Inconclusive
    };
    let agrees = match outcome {
        SweepOutcome::SingularConfirmed => !classification.smooth,
        _ => !classification.smooth || outcome == SweepOutcome::SmoothConsistent,
    };
    Ok(SweepReport {
        m,
        r,
        lengths: n,
        expected_dim: expected,
        max_tangent_dim,
        outcome,
        classification,
        agrees,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(m: usize, r: usize, n: &[usize]) -> SweepReport {
        verify_smoothness(m, r, n, &Bounds::default()).unwrap()
    }

    #[test]
    fn worked_sweeps() {
        let rep = outcome(2, 1, &[3]);
        assert_eq!(rep.outcome, SweepOutcome::SmoothConsistent);
        assert_eq!(rep.fixed_points(), 3);
        assert!(rep.records.iter().all(|r| r.tangent_dim == 6));

        let rep = outcome(2, 2, &[2]);
        assert_eq!(rep.outcome, SweepOutcome::SingularConfirmed);
        assert_eq!(rep.max_tangent_dim, 8);

        // Hilb^{1,2}(A^3) is the blowup of A^3 x A^3 along the diagonal
        let rep = outcome(3, 1, &[1, 2]);
        assert_eq!(rep.outcome, SweepOutcome::SmoothConsistent);
        assert_eq!(rep.fixed_points(), 3);
        assert!(rep.records.iter().all(|r| r.tangent_dim == 6));
        assert!(rep.agrees);
    }

    #[test]
    fn partitions_of_four() {
        let rep = outcome(2, 1, &[4]);
        assert_eq!(rep.fixed_points(), 5);
        assert!(rep.records.iter().all(|r| r.tangent_dim == 8));
    }

    #[test]
    fn jet_bound_is_enforced() {
        let tight = Bounds {
            max_jet_dim: 5,
            max_fixed_points: 100,
        };
        assert!(verify_smoothness(2, 1, &[3], &tight).is_err());
    }
}
