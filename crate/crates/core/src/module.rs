//! Finite-length modules over `Q[x_1..x_m]`, presented by commuting matrices.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    characteristic_polynomial, format_rational, rational_roots, Echelon, QMatrix, Rational,
    SparseVec, Subspace,
};

/// A module of finite length `n`: `m` pairwise commuting `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    num_vars: usize,
    dim: usize,
    actions: Vec<QMatrix>,
}

impl FiniteModule {
    /// Validating constructor: square matrices of one size that pairwise commute.
    pub fn new(actions: Vec<QMatrix>) -> Result<Self> {
        let module = Self::new_unchecked(actions)?;
        if let Some((i, j)) = module.first_noncommuting_pair() {
            return Err(Error::NotCommuting(i + 1, j + 1));
        }
        Ok(module)
    }

    /// Checks shapes only; the commuting relations are left to [`check_commuting`](Self::check_commuting).
    pub fn new_unchecked(actions: Vec<QMatrix>) -> Result<Self> {
        let Some(first) = actions.first() else {
            return Err(Error::InvalidTuple("a module needs at least one variable".into()));
        };
        let n = first.rows();
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "action X{} is {}x{}, expected {n}x{n}",
                    i + 1,
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(FiniteModule {
            num_vars: actions.len(),
            dim: n,
            actions,
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        FiniteModule {
            num_vars,
            dim: 0,
            actions: vec![QMatrix::zeros(0, 0); num_vars],
        }
    }

    /// The residue field at the origin, `O/m_0`, repeated `copies` times with zero actions.
    pub fn origin_points(num_vars: usize, copies: usize) -> Self {
        FiniteModule {
            num_vars,
            dim: copies,
            actions: vec![QMatrix::zeros(copies, copies); num_vars],
        }
    }

    /// The residue field `O/m_p` at a rational point `p`.
    pub fn point(p: &[Rational]) -> Self {
        FiniteModule {
            num_vars: p.len(),
            dim: 1,
            actions: p.iter().map(|c| QMatrix::scalar(1, c)).collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[QMatrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &QMatrix {
        &self.actions[i]
    }

    fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.num_vars {
            for j in (i + 1)..self.num_vars {
                if !self.actions[i].commutator(&self.actions[j]).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn check_commuting(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    fn check_vars(&self, other: &FiniteModule) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "modules over {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        self.check_vars(other)?;
        Ok(FiniteModule {
            num_vars: self.num_vars,
            dim: self.dim + other.dim,
            actions: self
                .actions
                .iter()
                .zip(&other.actions)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        })
    }

    /// Change of basis `X_i -> g X_i g^{-1}`.
    pub fn conjugate(&self, g: &QMatrix, g_inv: &QMatrix) -> FiniteModule {
        FiniteModule {
            num_vars: self.num_vars,
            dim: self.dim,
            actions: self.actions.iter().map(|a| &(g * a) * g_inv).collect(),
        }
    }

    /// Translation of the support by `shift`: `X_i -> X_i + shift_i`.
    pub fn translate(&self, shift: &[Rational]) -> FiniteModule {
        assert_eq!(shift.len(), self.num_vars, "translate: shift has wrong length");
        FiniteModule {
            num_vars: self.num_vars,
            dim: self.dim,
            actions: self
                .actions
                .iter()
                .zip(shift)
                .map(|(a, c)| a + &QMatrix::scalar(self.dim, c))
                .collect(),
        }
    }

    /// Submodule on an invariant subspace, in the subspace's basis.
    pub fn restrict_to(&self, sub: &Subspace) -> Result<FiniteModule> {
        if sub.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("restrict_to: ambient dimension".into()));
        }
        let k = sub.dim();
        let mut actions = Vec::with_capacity(self.num_vars);
        for (i, x) in self.actions.iter().enumerate() {
            let mut a = QMatrix::zeros(k, k);
            for (j, b) in sub.basis().iter().enumerate() {
                let img = x.mul_vec(b);
                let coords = sub.coordinates(&img).ok_or_else(|| {
                    Error::InvalidPoint(format!("subspace is not invariant under X{}", i + 1))
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    a[(row, j)] = c;
                }
            }
            actions.push(a);
        }
        Ok(FiniteModule {
            num_vars: self.num_vars,
            dim: k,
            actions,
        })
    }

    /// Smallest `a` with `m_0^a T = 0`; fails unless every action is nilpotent.
    pub fn loewy_length(&self) -> Result<usize> {
        let mut current = Subspace::full(self.dim);
        let mut a = 0;
        while !current.is_zero() {
            let mut images = Vec::new();
            for x in &self.actions {
                for v in current.basis() {
                    images.push(x.mul_vec(v));
                }
            }
            let next = Subspace::span(self.dim, &images);
            if next.dim() == current.dim() {
                return Err(Error::NotLocal);
            }
            current = next;
            a += 1;
        }
        Ok(a)
    }

    pub fn is_local(&self) -> bool {
        self.loewy_length().is_ok()
    }

    /// Joint spectrum with local lengths, sorted by point.
    pub fn support(&self) -> Result<Vec<(Vec<Rational>, usize)>> {
        Ok(SupportDecomposition::new(self)?
            .pieces()
            .iter()
            .map(|p| (p.point.clone(), p.subspace.dim()))
            .collect())
    }

    /// The summand supported at `p`, translated to the origin.
    pub fn localize_at(&self, p: &[Rational]) -> Result<FiniteModule> {
        let dec = SupportDecomposition::new(self)?;
        let idx = dec.find(p).ok_or_else(|| {
            Error::NotInSupport(format!(
                "({})",
                p.iter().map(format_rational).collect::<Vec<_>>().join(",")
            ))
        })?;
        dec.local_module(self, idx)
    }
}

/// A module homomorphism, checked to intertwine the actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FiniteModule,
    target: FiniteModule,
    matrix: QMatrix,
}

impl ModuleMap {
    pub fn new(source: FiniteModule, target: FiniteModule, matrix: QMatrix) -> Result<Self> {
        source.check_vars(&target)?;
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        for (i, (xs, xt)) in source.actions.iter().zip(&target.actions).enumerate() {
            if &matrix * xs != xt * &matrix {
                return Err(Error::InvalidPoint(format!(
                    "map does not commute with X{}",
                    i + 1
                )));
            }
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim
    }
}

/// Sparse matrix of `vec(phi) -> vec(tgt * phi - phi * src)` on `t x s`
/// matrices `phi`, flattened row-major.
fn intertwiner_operator(src: &QMatrix, tgt: &QMatrix) -> Vec<SparseVec> {
    let (s, t) = (src.rows(), tgt.rows());
    let src_cols: Vec<Vec<(usize, Rational)>> = (0..s)
        .map(|c| {
            (0..s)
                .filter(|&b| !src[(b, c)].is_zero())
                .map(|b| (b, src[(b, c)].clone()))
                .collect()
        })
        .collect();
    let tgt_rows: Vec<Vec<(usize, Rational)>> = (0..t)
        .map(|a| {
            (0..t)
                .filter(|&e| !tgt[(a, e)].is_zero())
                .map(|e| (e, tgt[(a, e)].clone()))
                .collect()
        })
        .collect();
    let mut rows = Vec::with_capacity(t * s);
    for a in 0..t {
        for c in 0..s {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (e, x) in &tgt_rows[a] {
                *acc.entry(e * s + c).or_insert_with(Rational::zero) += x;
            }
            for (b, x) in &src_cols[c] {
                *acc.entry(a * s + b).or_insert_with(Rational::zero) -= x;
            }
            rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
    }
    rows
}

/// Basis of `{phi : phi X_i = X'_i phi}` as `t x s` matrices.
pub(crate) fn intertwiners(src: &[QMatrix], tgt: &[QMatrix]) -> Vec<QMatrix> {
    let s = src.first().map_or(0, QMatrix::rows);
    let t = tgt.first().map_or(0, QMatrix::rows);
    let mut e = Echelon::new(t * s);
    for (xs, xt) in src.iter().zip(tgt) {
        for row in intertwiner_operator(xs, xt) {
            if !row.is_empty() {
                e.insert(&row);
            }
        }
    }
    e.null_space()
        .into_iter()
        .map(|v| QMatrix::from_vec(t, s, v).expect("flattened t x s"))
        .collect()
}

/// Basis of `Hom_O(T, T')`.
pub fn hom_space(t: &FiniteModule, t2: &FiniteModule) -> Result<Vec<ModuleMap>> {
    t.check_vars(t2)?;
    Ok(intertwiners(&t.actions, &t2.actions)
        .into_iter()
        .map(|m| ModuleMap {
            source: t.clone(),
            target: t2.clone(),
            matrix: m,
        })
        .collect())
}

pub fn hom_dim(t: &FiniteModule, t2: &FiniteModule) -> Result<usize> {
    t.check_vars(t2)?;
    Ok(intertwiners(&t.actions, &t2.actions).len())
}

/// `dim Ext^1_O(T, T')` from the Koszul-type complex
/// `Hom(T,T') -> Hom(T,T')^m -> Hom(T,T')^{m choose 2}`.
pub fn ext1_dim(t: &FiniteModule, t2: &FiniteModule) -> Result<usize> {
    t.check_vars(t2)?;
    let m = t.num_vars;
    let block = t.dim * t2.dim;
    if block == 0 {
        return Ok(0);
    }
    let ops: Vec<Vec<SparseVec>> = t
        .actions
        .iter()
        .zip(&t2.actions)
        .map(|(xs, xt)| intertwiner_operator(xs, xt))
        .collect();

    let mut d0 = Echelon::new(block);
    for op in &ops {
        for row in op {
            if !row.is_empty() {
                d0.insert(row);
            }
        }
    }

    // d1(psi)_{ij} = L_i(psi_j) - L_j(psi_i)
    let mut d1 = Echelon::new(m * block);
    for i in 0..m {
        for j in (i + 1)..m {
            for r in 0..block {
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for (c, v) in &ops[j][r] {
                    row.push((i * block + c, -v.clone()));
                }
                for (c, v) in &ops[i][r] {
                    row.push((j * block + c, v.clone()));
                }
                row.sort_by_key(|(c, _)| *c);
                if !row.is_empty() {
                    d1.insert(&row);
                }
            }
        }
    }
    let ker_d1 = m * block - d1.rank();
    Ok(ker_d1 - d0.rank())
}

pub fn direct_sum(t: &FiniteModule, t2: &FiniteModule) -> Result<FiniteModule> {
    t.direct_sum(t2)
}

pub fn support(t: &FiniteModule) -> Result<Vec<(Vec<Rational>, usize)>> {
    t.support()
}

pub fn localize_at(t: &FiniteModule, p: &[Rational]) -> Result<FiniteModule> {
    t.localize_at(p)
}

#[derive(Clone, Debug)]
pub struct SupportPiece {
    pub point: Vec<Rational>,
    /// Generalized joint eigenspace at `point`, in ambient coordinates.
    pub subspace: Subspace,
}

/// Decomposition of a module into its generalized joint eigenspaces.
#[derive(Clone, Debug)]
pub struct SupportDecomposition {
    dim: usize,
    pieces: Vec<SupportPiece>,
    // inverse of the matrix whose columns are all piece bases, in piece order
    to_pieces: QMatrix,
}

impl SupportDecomposition {
    pub fn new(t: &FiniteModule) -> Result<Self> {
        let n = t.dim;
        let mut pieces = vec![SupportPiece {
            point: Vec::new(),
            subspace: Subspace::full(n),
        }];
        if n == 0 {
            pieces.clear();
        }
        for x in &t.actions {
            let mut refined = Vec::new();
            for piece in pieces {
                let k = piece.subspace.dim();
                let restricted = restrict_operator(x, &piece.subspace)?;
                let roots = rational_roots(&characteristic_polynomial(&restricted))?;
                let mut covered = 0;
                for lambda in roots {
                    let shifted = &restricted - &QMatrix::scalar(k, &lambda);
                    let gen = shifted.pow(k).kernel_basis();
                    covered += gen.dim();
                    let incl = piece.subspace.inclusion();
                    let vectors: Vec<Vec<Rational>> =
                        gen.basis().iter().map(|w| incl.mul_vec(w)).collect();
                    let mut point = piece.point.clone();
                    point.push(lambda);
                    refined.push(SupportPiece {
                        point,
                        subspace: Subspace::span(n, &vectors),
                    });
                }
                if covered != k {
                    return Err(Error::IrrationalSupport);
                }
            }
            pieces = refined;
        }
        pieces.sort_by(|a, b| a.point.cmp(&b.point));
        let columns: Vec<Vec<Rational>> = pieces
            .iter()
            .flat_map(|p| p.subspace.basis().iter().cloned())
            .collect();
        let to_pieces = QMatrix::from_columns(n, &columns)?
            .inverse()
            .expect("generalized eigenspaces span the module");
        Ok(SupportDecomposition { dim: n, pieces, to_pieces })
    }

    pub fn pieces(&self) -> &[SupportPiece] {
        &self.pieces
    }

    pub fn find(&self, p: &[Rational]) -> Option<usize> {
        self.pieces.iter().position(|piece| piece.point == p)
    }

    /// Coordinates of `v` split by piece, each in that piece's subspace basis.
    pub fn components(&self, v: &[Rational]) -> Vec<Vec<Rational>> {
        assert_eq!(v.len(), self.dim, "components: length mismatch");
        let all = self.to_pieces.mul_vec(v);
        let mut out = Vec::with_capacity(self.pieces.len());
        let mut offset = 0;
        for p in &self.pieces {
            let k = p.subspace.dim();
            out.push(all[offset..offset + k].to_vec());
            offset += k;
        }
        out
    }

    /// Piece `idx` as a module supported at the origin.
    pub fn local_module(&self, t: &FiniteModule, idx: usize) -> Result<FiniteModule> {
        let piece = &self.pieces[idx];
        let neg: Vec<Rational> = piece.point.iter().map(|c| -c.clone()).collect();
        Ok(t.restrict_to(&piece.subspace)?.translate(&neg))
    }
}

fn restrict_operator(x: &QMatrix, sub: &Subspace) -> Result<QMatrix> {
    let k = sub.dim();
    let mut a = QMatrix::zeros(k, k);
    for (j, b) in sub.basis().iter().enumerate() {
        let coords = sub
            .coordinates(&x.mul_vec(b))
            .ok_or_else(|| Error::InvalidPoint("subspace not invariant".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            a[(i, j)] = c;
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn diag(entries: &[i64]) -> QMatrix {
        let n = entries.len();
        let mut m = QMatrix::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = rational(e);
        }
        m
    }

    /// `O/m_0^2` in two variables: basis 1, x, y.
    fn fat_point_2d() -> FiniteModule {
        let x = QMatrix::from_i64(3, 3, &[0, 0, 0, 1, 0, 0, 0, 0, 0]);
        let y = QMatrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 0, 1, 0, 0]);
        FiniteModule::new(vec![x, y]).unwrap()
    }

    #[test]
    fn commuting_checks() {
        assert!(FiniteModule::origin_points(2, 3).check_commuting());
        let bad = FiniteModule::new_unchecked(vec![QMatrix::unit(2, 2, 0, 1), QMatrix::unit(2, 2, 1, 0)]).unwrap();
        assert!(!bad.check_commuting());
        assert!(matches!(
            FiniteModule::new(vec![QMatrix::unit(2, 2, 0, 1), QMatrix::unit(2, 2, 1, 0)]),
            Err(Error::NotCommuting(1, 2))
        ));
        let single = FiniteModule::new(vec![QMatrix::from_i64(2, 2, &[1, 2, 3, 4])]).unwrap();
        assert!(single.check_commuting());
    }

    #[test]
    fn hom_examples() {
        let o = FiniteModule::origin_points(2, 1);
        assert_eq!(hom_dim(&o, &o).unwrap(), 1);
        let o2 = FiniteModule::origin_points(2, 2);
        assert_eq!(hom_dim(&o2, &o2).unwrap(), 4);
        // Hom(O/m^2, O_0): only the projection onto the top survives
        assert_eq!(hom_dim(&fat_point_2d(), &o).unwrap(), 1);
        // and every returned map intertwines
        for phi in hom_space(&fat_point_2d(), &fat_point_2d()).unwrap() {
            assert!(ModuleMap::new(phi.source().clone(), phi.target().clone(), phi.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn hom_rejects_mismatched_vars() {
        let a = FiniteModule::origin_points(2, 1);
        let b = FiniteModule::origin_points(3, 1);
        assert!(hom_space(&a, &b).is_err());
        assert!(ext1_dim(&a, &b).is_err());
    }

    #[test]
    fn ext1_of_residue_field() {
        assert_eq!(ext1_dim(&FiniteModule::origin_points(1, 1), &FiniteModule::origin_points(1, 1)).unwrap(), 1);
        assert_eq!(ext1_dim(&FiniteModule::origin_points(2, 1), &FiniteModule::origin_points(2, 1)).unwrap(), 2);
        assert_eq!(ext1_dim(&FiniteModule::origin_points(3, 1), &FiniteModule::origin_points(3, 1)).unwrap(), 3);
    }

    #[test]
    fn disjoint_supports_are_orthogonal() {
        let a = FiniteModule::point(&[rational(0), rational(0)]);
        let b = FiniteModule::point(&[rational(1), rational(2)]);
        assert_eq!(hom_dim(&a, &b).unwrap(), 0);
        assert_eq!(ext1_dim(&a, &b).unwrap(), 0);
        assert_eq!(ext1_dim(&fat_point_2d(), &b).unwrap(), 0);
    }

    #[test]
    fn direct_sum_examples() {
        let t = fat_point_2d();
        assert_eq!(t.direct_sum(&FiniteModule::zero(2)).unwrap(), t);
        let o = FiniteModule::origin_points(2, 1);
        assert_eq!(o.direct_sum(&o).unwrap(), FiniteModule::origin_points(2, 2));
        let two = FiniteModule::origin_points(2, 2);
        assert_eq!(two.direct_sum(&t).unwrap().dim(), 5);
    }

    #[test]
    fn support_examples() {
        let zero3 = FiniteModule::origin_points(2, 3);
        assert_eq!(zero3.support().unwrap(), vec![(vec![rational(0), rational(0)], 3)]);

        let t = FiniteModule::new(vec![diag(&[0, 1])]).unwrap();
        assert_eq!(
            t.support().unwrap(),
            vec![(vec![rational(0)], 1), (vec![rational(1)], 1)]
        );

        let t = FiniteModule::new(vec![diag(&[0, 2]), diag(&[0, 3])]).unwrap();
        assert_eq!(
            t.support().unwrap(),
            vec![
                (vec![rational(0), rational(0)], 1),
                (vec![rational(2), rational(3)], 1)
            ]
        );
    }

    #[test]
    fn irrational_support_is_reported() {
        // x^2 = 2
        let t = FiniteModule::new(vec![QMatrix::from_i64(2, 2, &[0, 2, 1, 0])]).unwrap();
        assert!(matches!(t.support(), Err(Error::IrrationalSupport)));
    }

    #[test]
    fn localization_examples() {
        let t = fat_point_2d();
        assert_eq!(t.localize_at(&[rational(0), rational(0)]).unwrap(), t);

        let t = FiniteModule::new(vec![diag(&[0, 1])]).unwrap();
        let local = t.localize_at(&[rational(1)]).unwrap();
        assert_eq!(local, FiniteModule::origin_points(1, 1));
        assert!(matches!(t.localize_at(&[rational(5)]), Err(Error::NotInSupport(_))));
    }

    #[test]
    fn loewy_lengths() {
        assert_eq!(fat_point_2d().loewy_length().unwrap(), 2);
        assert_eq!(FiniteModule::zero(2).loewy_length().unwrap(), 0);
        assert_eq!(FiniteModule::origin_points(2, 2).loewy_length().unwrap(), 1);
        let t = FiniteModule::new(vec![diag(&[0, 1])]).unwrap();
        assert!(matches!(t.loewy_length(), Err(Error::NotLocal)));
    }
}
