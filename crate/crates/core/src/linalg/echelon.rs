//! Incremental row-echelon form over the rationals with sparse rows.
//!
//! Every dense operation in [`QMatrix`](super::QMatrix) and every span or
//! quotient computation in the kernel presentations is routed through
//! [`Echelon`]. Rows are stored sparsely with a unit pivot, so the long
//! but very sparse systems produced by jet truncations stay cheap.

use num_traits::{One, Zero};

use super::Rational;

/// Sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(dense: &[Rational]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn to_dense(sparse: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, v) in sparse {
        out[*i] = v.clone();
    }
    out
}

/// A set of linearly independent rows in echelon form.
///
/// Row `k` has its first nonzero entry (the pivot) equal to one, and no two
/// rows share a pivot column. Rows are *not* reduced against each other,
/// which keeps insertion cheap; reduction of an incoming vector still
/// yields unique coefficients because each row only touches columns at or
/// after its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
    scratch: Vec<Rational>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
            scratch: vec![Rational::zero(); ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> &SparseVec {
        &self.rows[k]
    }

    pub fn pivot_col(&self, k: usize) -> usize {
        self.rows[k][0].0
    }

    /// Row index owning `col` as its pivot, if any.
    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }

    fn load(&mut self, v: &[(usize, Rational)]) {
        for (i, x) in v {
            self.scratch[*i] = x.clone();
        }
    }

    /// Eliminates every pivot column from the scratch buffer, optionally
    /// recording the coefficient used for each row.
    fn eliminate(&mut self, mut coeffs: Option<&mut Vec<(usize, Rational)>>) {
        for c in 0..self.ncols {
            if self.scratch[c].is_zero() {
                continue;
            }
            let Some(k) = self.pivot_row[c] else { continue };
            let f = std::mem::replace(&mut self.scratch[c], Rational::zero());
            for (cc, val) in self.rows[k].iter().skip(1) {
                let delta = &f * val;
                self.scratch[*cc] -= delta;
            }
            if let Some(out) = coeffs.as_deref_mut() {
                out.push((k, f));
            }
        }
    }

    fn drain_scratch(&mut self) -> SparseVec {
        let mut out = Vec::new();
        for (i, x) in self.scratch.iter_mut().enumerate() {
            if !x.is_zero() {
                out.push((i, std::mem::replace(x, Rational::zero())));
            }
        }
        out
    }

    /// Reduces `v` modulo the row space.
    ///
    /// Returns the coefficients `(row, c)` with `v = sum c * row + remainder`
    /// and the remainder, which is zero exactly when `v` lies in the span.
    pub fn reduce(&mut self, v: &[(usize, Rational)]) -> (Vec<(usize, Rational)>, SparseVec) {
        self.load(v);
        let mut coeffs = Vec::new();
        self.eliminate(Some(&mut coeffs));
        let rem = self.drain_scratch();
        (coeffs, rem)
    }

    /// Inserts `v`, returning the index of the new row when `v` was not
    /// already in the span.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> Option<usize> {
        self.load(v);
        self.eliminate(None);
        let mut rem = self.drain_scratch();
        if rem.is_empty() {
            return None;
        }
        let lead = rem[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, x) in rem.iter_mut() {
                *x *= &inv;
            }
        }
        let k = self.rows.len();
        self.pivot_row[rem[0].0] = Some(k);
        self.rows.push(rem);
        Some(k)
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> Option<usize> {
        self.insert(&to_sparse(v))
    }

    pub fn contains(&mut self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).1.is_empty()
    }

    /// Basis of the null space `{x : row . x = 0 for every row}`, one vector
    /// per non-pivot column, obtained by back substitution.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(self.pivot_col(k)));
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for &k in &order {
                    let row = &self.rows[k];
                    let mut acc = Rational::zero();
                    for (c, val) in row.iter().skip(1) {
                        if !x[*c].is_zero() {
                            acc -= val * &x[*c];
                        }
                    }
                    x[row[0].0] = acc;
                }
                x
            })
            .collect()
    }

    /// Rows brought to reduced row-echelon form, sorted by pivot column.
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivot_col(k));
        let mut reduced: Vec<Option<SparseVec>> = vec![None; self.rows.len()];
        let mut scratch = vec![Rational::zero(); self.ncols];
        for &k in order.iter().rev() {
            for (c, x) in &self.rows[k] {
                scratch[*c] = x.clone();
            }
            let p = self.pivot_col(k);
            for c in (p + 1)..self.ncols {
                if scratch[c].is_zero() {
                    continue;
                }
                let Some(j) = self.pivot_row[c] else { continue };
                let f = std::mem::replace(&mut scratch[c], Rational::zero());
                let rj = reduced[j].as_ref().expect("later pivots reduced first");
                for (cc, val) in rj.iter().skip(1) {
                    let delta = &f * val;
                    scratch[*cc] -= delta;
                }
            }
            let mut row = Vec::new();
            for (i, x) in scratch.iter_mut().enumerate() {
                if !x.is_zero() {
                    row.push((i, std::mem::replace(x, Rational::zero())));
                }
            }
            reduced[k] = Some(row);
        }
        order
            .into_iter()
            .map(|k| reduced[k].take().expect("every row reduced"))
            .collect()
    }
}
