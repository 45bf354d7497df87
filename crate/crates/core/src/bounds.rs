//! Resource limits shared by the tangent computations and the fixed-point sweeps.

use crate::error::{Error, Result};

pub const ENV_MAX_JET_DIM: &str = "NESTED_QUOT_MAX_JET_DIM";
pub const ENV_MAX_FIXED_POINTS: &str = "NESTED_QUOT_MAX_FIXED_POINTS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest allowed dimension of a jet algebra `O/m^N`.
    pub max_jet_dim: usize,
    /// Largest number of torus-fixed points a sweep may enumerate.
    pub max_fixed_points: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_jet_dim: 3000,
            max_fixed_points: 100_000,
        }
    }
}

impl Bounds {
    /// Defaults, overridden by the environment variables when set.
    pub fn from_env() -> Result<Self> {
        let mut b = Bounds::default();
        if let Some(v) = read_env(ENV_MAX_JET_DIM)? {
            b.max_jet_dim = v;
        }
        if let Some(v) = read_env(ENV_MAX_FIXED_POINTS)? {
            b.max_fixed_points = v;
        }
        Ok(b)
    }

    pub fn check_jet_dim(&self, requested: usize) -> Result<()> {
        if requested > self.max_jet_dim {
            return Err(Error::ResourceBound {
                what: "jet algebra dimension".into(),
                limit: self.max_jet_dim,
                requested,
            });
        }
        Ok(())
    }

    pub fn check_fixed_points(&self, requested: usize) -> Result<()> {
        if requested > self.max_fixed_points {
            return Err(Error::ResourceBound {
                what: "fixed-point count".into(),
                limit: self.max_fixed_points,
                requested,
            });
        }
        Ok(())
    }
}

fn read_env(key: &str) -> Result<Option<usize>> {
    match std::env::var(key) {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| {
            Error::InvalidTuple(format!("{key} must be a nonnegative integer, got {s:?}"))
        }),
        Err(_) => Ok(None),
    }
}

/// `binomial(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 3), 120);
    }

    #[test]
    fn guards() {
        let b = Bounds::default();
        assert!(b.check_jet_dim(3000).is_ok());
        assert!(matches!(b.check_jet_dim(3001), Err(Error::ResourceBound { .. })));
        assert!(b.check_fixed_points(100_001).is_err());
    }
}
