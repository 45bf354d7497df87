//! Matrix-and-vector data `(A_1..A_m, v_1..v_r)` without commutation relations.
//!
//! The commuting stable tuples form the Quot scheme; dropping the relations
//! gives a smooth space of dimension `(m - 1) n^2 + r n` after dividing by
//! `GL_n`. Everything here works on representatives.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};
use crate::module::FiniteModule;
use crate::quot::point::generated_subspace;
use crate::quot::QuotPoint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCQuotPoint {
    n: usize,
    actions: Vec<QMatrix>,
    framing: Vec<Vec<Rational>>,
}

impl NCQuotPoint {
    /// Checks shapes: `m >= 1` square `n x n` actions and `r >= 1` vectors of length `n`.
    pub fn new(n: usize, actions: Vec<QMatrix>, framing: Vec<Vec<Rational>>) -> Result<Self> {
        if actions.is_empty() || framing.is_empty() {
            return Err(Error::InvalidPoint("need m >= 1 actions and r >= 1 framing vectors".into()));
        }
        if let Some((i, a)) = actions.iter().enumerate().find(|(_, a)| a.rows() != n || a.cols() != n) {
            return Err(Error::DimensionMismatch(format!(
                "action A{} is {}x{}, expected {n}x{n}",
                i + 1,
                a.rows(),
                a.cols()
            )));
        }
        if let Some((j, v)) = framing.iter().enumerate().find(|(_, v)| v.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "framing vector v{} has length {}, expected {n}",
                j + 1,
                v.len()
            )));
        }
        Ok(NCQuotPoint { n, actions, framing })
    }

    pub fn from_quot_point(p: &QuotPoint) -> Self {
        NCQuotPoint {
            n: p.length(),
            actions: p.module().actions().to_vec(),
            framing: p.framing().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        self.actions.len()
    }

    pub fn rank(&self) -> usize {
        self.framing.len()
    }

    pub fn actions(&self) -> &[QMatrix] {
        &self.actions
    }

    pub fn framing(&self) -> &[Vec<Rational>] {
        &self.framing
    }

    /// `(g A_i g^-1, g v_j)`.
    pub fn gauge(&self, g: &QMatrix) -> Result<NCQuotPoint> {
        let g_inv = g
            .inverse()
            .ok_or_else(|| Error::InvalidPoint("gauge matrix is not invertible".into()))?;
        if g.rows() != self.n {
            return Err(Error::DimensionMismatch(format!("gauge matrix of size {} for n = {}", g.rows(), self.n)));
        }
        Ok(NCQuotPoint {
            n: self.n,
            actions: self.actions.iter().map(|a| &(g * a) * &g_inv).collect(),
            framing: self.framing.iter().map(|v| g.mul_vec(v)).collect(),
        })
    }
}

/// Whether all words in the actions applied to the framing span `Q^n`.
pub fn nc_is_stable(p: &NCQuotPoint) -> bool {
    generated_subspace(p.n, &p.actions, &p.framing).dim() == p.n
}

/// Ranks of `[A_i, A_j]` for `i < j`, in lexicographic order of `(i, j)`.
pub fn commutator_defect(p: &NCQuotPoint) -> Vec<usize> {
    let m = p.actions.len();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            out.push(p.actions[i].commutator(&p.actions[j]).rank());
        }
    }
    out
}

pub fn to_quot_point(p: &NCQuotPoint) -> Result<QuotPoint> {
    let module = FiniteModule::new(p.actions.clone())?;
    QuotPoint::new(module, p.framing.clone())
}

/// `(m - 1) n^2 + r n`.
pub fn ncquot_dim(m: usize, n: usize, r: usize) -> usize {
    m.saturating_sub(1) * n * n + r * n
}

/// The unique invertible `g` with `g A_i = A'_i g` and `g v_j = v'_j`, if any.
///
/// Solves the homogeneous system in `(g, t)` with `g v_j = t v'_j`. For
/// stable data its solution space has dimension at most one, and a nonzero
/// solution has `t != 0`.
pub fn framed_isomorphic(p: &NCQuotPoint, q: &NCQuotPoint) -> Option<QMatrix> {
    let n = p.n;
    if q.n != n || p.num_vars() != q.num_vars() || p.rank() != q.rank() {
        return None;
    }
    let unknowns = n * n + 1;
    let t_col = n * n;
    let var = |row: usize, col: usize| row * n + col;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (a, b) in p.actions.iter().zip(&q.actions) {
        // (g a - b g)[i][k] = sum_l g[i][l] a[l][k] - sum_l b[i][l] g[l][k]
        for i in 0..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); unknowns];
                for l in 0..n {
                    row[var(i, l)] += &a[(l, k)];
                    row[var(l, k)] -= &b[(i, l)];
                }
                rows.push(row);
            }
        }
    }
    for (v, w) in p.framing.iter().zip(&q.framing) {
        for i in 0..n {
            let mut row = vec![Rational::zero(); unknowns];
            for l in 0..n {
                row[var(i, l)] += &v[l];
            }
            row[t_col] -= &w[i];
            rows.push(row);
        }
    }
    let system = QMatrix::from_rows(unknowns, &rows).expect("rows have the declared width");
    let kernel = system.kernel_basis();
    if kernel.dim() == 0 {
        return None;
    }
    assert_eq!(kernel.dim(), 1, "stable framed data has at most a line of intertwiners");
    let sol = &kernel.basis()[0];
    if sol[t_col].is_zero() {
        return None;
    }
    let scale = Rational::one() / &sol[t_col];
    let entries: Vec<Rational> = sol[..n * n].iter().map(|x| x * &scale).collect();
    let g = QMatrix::from_vec(n, n, entries).expect("n^2 entries");
    g.is_invertible().then_some(g)
}
