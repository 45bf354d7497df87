//! The truncated polynomial ring `B = Q[x_1..x_m] / m_0^N`.
//!
//! Hom computations out of a kernel `K ⊂ O^r` only ever see `K` modulo a
//! high power of the maximal ideal, so everything factors through `B`.

use std::collections::HashMap;

use crate::bounds::{binomial, Bounds};
use crate::error::{Error, Result};
use crate::linalg::{rational, QMatrix, Subspace};
use crate::module::FiniteModule;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug)]
pub struct JetAlgebra {
    num_vars: usize,
    order: usize,
    basis: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    // shift[i][k]: index of x_i * basis[k], None when it falls into m^N
    shift: Vec<Vec<Option<usize>>>,
}

/// Exponent vectors of total degree `d` in `m` variables, lexicographically
/// descending (so `x^2, xy, y^2`).
pub fn monomials_of_degree(m: usize, d: u32) -> Vec<Exponent> {
    if m == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(m - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl JetAlgebra {
    pub fn new(num_vars: usize, order: usize) -> Result<Self> {
        Self::with_bounds(num_vars, order, &Bounds::default())
    }

    pub fn with_bounds(num_vars: usize, order: usize, bounds: &Bounds) -> Result<Self> {
        if num_vars == 0 || order == 0 {
            return Err(Error::InvalidTuple(format!(
                "jet algebra needs m >= 1 and N >= 1, got m={num_vars}, N={order}"
            )));
        }
        bounds.check_jet_dim(binomial(order - 1 + num_vars, num_vars))?;
        let basis: Vec<Exponent> = (0..order as u32)
            .flat_map(|d| monomials_of_degree(num_vars, d))
            .collect();
        let index: HashMap<Exponent, usize> =
            basis.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
        let shift = (0..num_vars)
            .map(|i| {
                basis
                    .iter()
                    .map(|e| {
                        let mut f = e.clone();
                        f[i] += 1;
                        index.get(&f).copied()
                    })
                    .collect()
            })
            .collect();
        Ok(JetAlgebra {
            num_vars,
            order,
            basis,
            index,
            shift,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Exponent] {
        &self.basis
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn degree(&self, k: usize) -> usize {
        self.basis[k].iter().map(|&x| x as usize).sum()
    }

    /// Index of `x_var * basis[k]`, or `None` if it vanishes in `B`.
    pub fn shift(&self, var: usize, k: usize) -> Option<usize> {
        self.shift[var][k]
    }

    /// Dense matrix of multiplication by `x_var` in the monomial basis.
    pub fn mult_op(&self, var: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for k in 0..n {
            if let Some(t) = self.shift[var][k] {
                m[(t, k)] = rational(1);
            }
        }
        m
    }

    pub fn mult_ops(&self) -> Vec<QMatrix> {
        (0..self.num_vars).map(|i| self.mult_op(i)).collect()
    }

    /// `m_0^k` as the span of monomials of degree at least `k`.
    pub fn maximal_ideal_power(&self, k: usize) -> Result<Subspace> {
        if k > self.order {
            return Err(Error::InvalidTuple(format!(
                "power {k} exceeds truncation order {}",
                self.order
            )));
        }
        let n = self.dim();
        let vectors: Vec<_> = (0..n)
            .filter(|&j| self.degree(j) >= k)
            .map(|j| {
                let mut v = vec![rational(0); n];
                v[j] = rational(1);
                v
            })
            .collect();
        Ok(Subspace::span(n, &vectors))
    }

    /// The free module `B^r`, with block-diagonal multiplication operators.
    pub fn free_module(&self, r: usize) -> Result<FiniteModule> {
        if r == 0 {
            return Err(Error::InvalidTuple("free module of rank 0".into()));
        }
        let single = FiniteModule::new(self.mult_ops())?;
        let mut acc = single.clone();
        for _ in 1..r {
            acc = acc.direct_sum(&single)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let b = JetAlgebra::new(1, 3).unwrap();
        assert_eq!(b.basis(), &[vec![0], vec![1], vec![2]]);
        let b = JetAlgebra::new(2, 2).unwrap();
        assert_eq!(b.basis(), &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(JetAlgebra::new(3, 4).unwrap().dim(), 20);
    }

    #[test]
    fn ideal_powers() {
        let b = JetAlgebra::new(2, 3).unwrap();
        assert!(b.maximal_ideal_power(0).unwrap().is_full());
        assert!(b.maximal_ideal_power(3).unwrap().is_zero());
        assert_eq!(b.maximal_ideal_power(1).unwrap().dim(), 5);
        assert!(b.maximal_ideal_power(4).is_err());
    }

    #[test]
    fn ideal_power_dimension_formula() {
        for m in 1..=3 {
            for n in 1..=5 {
                let b = JetAlgebra::new(m, n).unwrap();
                for k in 0..=n {
                    let expected = binomial(n - 1 + m, m) - if k == 0 { 0 } else { binomial(k - 1 + m, m) };
                    assert_eq!(b.maximal_ideal_power(k).unwrap().dim(), expected, "m={m} N={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn mult_ops_commute_and_lower_filtration() {
        let b = JetAlgebra::new(3, 4).unwrap();
        let ops = b.mult_ops();
        for i in 0..3 {
            for j in 0..3 {
                assert!(ops[i].commutator(&ops[j]).is_zero());
            }
            for k in 0..4 {
                let mk = b.maximal_ideal_power(k).unwrap();
                let mk1 = b.maximal_ideal_power(k + 1).unwrap();
                assert!(mk1.contains_subspace(&mk.image_under(&ops[i]).unwrap()));
            }
        }
        // product of N operators vanishes
        let prod = ops.iter().cycle().take(4).fold(QMatrix::identity(b.dim()), |acc, x| &acc * x);
        assert!(prod.is_zero());
    }

    #[test]
    fn free_modules() {
        let b = JetAlgebra::new(2, 2).unwrap();
        assert_eq!(b.free_module(1).unwrap().dim(), 3);
        let f = b.free_module(2).unwrap();
        assert_eq!(f.dim(), 6);
        assert!(f.check_commuting());
    }

    #[test]
    fn resource_guard() {
        let bounds = Bounds {
            max_jet_dim: 10,
            ..Bounds::default()
        };
        assert!(JetAlgebra::with_bounds(3, 3, &bounds).is_ok());
        assert!(matches!(
            JetAlgebra::with_bounds(3, 4, &bounds),
            Err(Error::ResourceBound { .. })
        ));
    }
}
