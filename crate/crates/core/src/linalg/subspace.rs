use num_traits::Zero;

use super::echelon::{to_dense, to_sparse, Echelon};
use super::{QMatrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, kept in reduced row-echelon form so that two
/// equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_independent(ambient_dim, QMatrix::identity(ambient_dim).row_vecs())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "span: vector length mismatch");
            e.insert_dense(v);
        }
        Self::from_echelon(&e)
    }

    pub(crate) fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Self::span(ambient_dim, &vectors)
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Self {
        let rows = e.reduced_rows();
        let pivots = rows.iter().map(|r| r[0].0).collect();
        let basis = rows.iter().map(|r| to_dense(r, e.ncols())).collect();
        Subspace {
            ambient_dim: e.ncols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> QMatrix {
        QMatrix::from_columns(self.ambient_dim, &self.basis).expect("basis vectors have ambient length")
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "coordinates: length mismatch");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += c * x;
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient_dim, &all))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // Solve A a = B b: kernel of [A | -B], then map back through A.
        let n = self.ambient_dim;
        let (da, db) = (self.dim(), other.dim());
        let mut stacked = QMatrix::zeros(n, da + db);
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..n {
                stacked[(i, j)] = v[i].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..n {
                stacked[(i, da + j)] = -v[i].clone();
            }
        }
        let ker = stacked.kernel_basis();
        let vectors: Vec<Vec<Rational>> = ker
            .basis()
            .iter()
            .map(|sol| {
                let mut out = vec![Rational::zero(); n];
                for (c, v) in sol[..da].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(v) {
                        *o += c * x;
                    }
                }
                out
            })
            .collect();
        Ok(Subspace::span(n, &vectors))
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &QMatrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to a subspace of Q^{}",
                m.rows(),
                m.cols(),
                self.ambient_dim
            )));
        }
        let imgs: Vec<Vec<Rational>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Ok(Subspace::span(m.rows(), &imgs))
    }

    pub fn is_invariant_under(&self, m: &QMatrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Smallest subspace containing `self` and invariant under every operator.
    pub fn closure_under(&self, ops: &[QMatrix]) -> Subspace {
        let mut e = Echelon::new(self.ambient_dim);
        let mut queue: Vec<Vec<Rational>> = Vec::new();
        for v in &self.basis {
            if e.insert_dense(v).is_some() {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for op in ops {
                let w = op.mul_vec(&v);
                if e.insert(&to_sparse(&w)).is_some() {
                    queue.push(w);
                }
            }
        }
        Subspace::from_echelon(&e)
    }
}

/// Matrix of `m` on the basis of `a`, with values in ambient coordinates.
pub fn restrict_map(m: &QMatrix, a: &Subspace) -> Result<QMatrix> {
    m.try_mul(&a.inclusion())
}
