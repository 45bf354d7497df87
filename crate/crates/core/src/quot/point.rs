use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational, Subspace};
use crate::module::{FiniteModule, ModuleMap, SupportDecomposition};

/// A framed module `[O^r ->> T]`: the module `T` together with the images
/// `v_1..v_r` of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotPoint {
    module: FiniteModule,
    framing: Vec<Vec<Rational>>,
}

/// Krylov closure of `vectors` under `ops`; equals the whole space iff stable.
pub(crate) fn generated_subspace(dim: usize, ops: &[QMatrix], vectors: &[Vec<Rational>]) -> Subspace {
    Subspace::span(dim, vectors).closure_under(ops)
}

impl QuotPoint {
    /// Validating constructor: the framing must generate the module.
    pub fn new(module: FiniteModule, framing: Vec<Vec<Rational>>) -> Result<Self> {
        let p = Self::new_unchecked(module, framing)?;
        let generated = generated_subspace(p.module.dim(), p.module.actions(), &p.framing).dim();
        if generated != p.module.dim() {
            return Err(Error::NotStable {
                generated,
                dim: p.module.dim(),
            });
        }
        Ok(p)
    }

    /// Checks shapes only.
    pub fn new_unchecked(module: FiniteModule, framing: Vec<Vec<Rational>>) -> Result<Self> {
        if framing.is_empty() {
            return Err(Error::InvalidPoint("framing needs at least one vector (r >= 1)".into()));
        }
        if let Some(v) = framing.iter().find(|v| v.len() != module.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "framing vector of length {} for a module of length {}",
                v.len(),
                module.dim()
            )));
        }
        Ok(QuotPoint { module, framing })
    }

    /// `[O^r ->> O_0^{copies}]` with framing `e_1..e_copies, 0, ..., 0`.
    pub fn origin_points(num_vars: usize, rank: usize, copies: usize) -> Result<Self> {
        if copies > rank {
            return Err(Error::InvalidPoint(format!(
                "O^{rank} cannot surject onto {copies} copies of the residue field"
            )));
        }
        let framing = (0..rank)
            .map(|j| {
                (0..copies)
                    .map(|i| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self::new(FiniteModule::origin_points(num_vars, copies), framing)
    }

    /// `[O^r ->> O_p]` sending the first generator to 1 and the others to 0.
    pub fn simple_point(p: &[Rational], rank: usize) -> Result<Self> {
        let framing = (0..rank)
            .map(|j| vec![if j == 0 { Rational::from_integer(1.into()) } else { Rational::zero() }])
            .collect();
        Self::new(FiniteModule::point(p), framing)
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn framing(&self) -> &[Vec<Rational>] {
        &self.framing
    }

    pub fn rank(&self) -> usize {
        self.framing.len()
    }

    pub fn num_vars(&self) -> usize {
        self.module.num_vars()
    }

    pub fn length(&self) -> usize {
        self.module.dim()
    }

    pub fn is_stable(&self) -> bool {
        generated_subspace(self.module.dim(), self.module.actions(), &self.framing).is_full()
    }

    /// Framed direct sum: modules add, framing vectors are concatenated.
    pub fn direct_sum(&self, other: &QuotPoint) -> Result<QuotPoint> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch(format!(
                "framings of rank {} and {}",
                self.rank(),
                other.rank()
            )));
        }
        let module = self.module.direct_sum(&other.module)?;
        let framing = self
            .framing
            .iter()
            .zip(&other.framing)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Ok(QuotPoint { module, framing })
    }

    /// Change of basis by `g`: actions conjugated, framing transformed.
    pub fn gauge(&self, g: &QMatrix) -> Result<QuotPoint> {
        let g_inv = g
            .inverse()
            .ok_or_else(|| Error::InvalidPoint("gauge transformation is not invertible".into()))?;
        Ok(QuotPoint {
            module: self.module.conjugate(g, &g_inv),
            framing: self.framing.iter().map(|v| g.mul_vec(v)).collect(),
        })
    }

    pub fn translate(&self, shift: &[Rational]) -> QuotPoint {
        QuotPoint {
            module: self.module.translate(shift),
            framing: self.framing.clone(),
        }
    }
}

/// A chain of framed surjections `O^r ->> T_d ->> ... ->> T_1`.
///
/// `levels[0]` is `T_1`; `maps[i]` is the surjection `T_{i+2} -> T_{i+1}`
/// (zero-based: from `levels[i + 1]` to `levels[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedQuotPoint {
    levels: Vec<QuotPoint>,
    maps: Vec<ModuleMap>,
}

impl NestedQuotPoint {
    /// Validates stability of every level, lengths, map shapes, the module
    /// map property, surjectivity, and framing compatibility.
    pub fn new(levels: Vec<QuotPoint>, maps: Vec<QMatrix>) -> Result<Self> {
        let z = Self::assemble(levels, maps)?;
        for (i, level) in z.levels.iter().enumerate() {
            if !level.is_stable() {
                let generated =
                    generated_subspace(level.length(), level.module.actions(), &level.framing).dim();
                return Err(Error::InvalidPoint(format!(
                    "level {} is not stable (framing generates {generated} of {})",
                    i + 1,
                    level.length()
                )));
            }
        }
        for (i, pi) in z.maps.iter().enumerate() {
            if !pi.is_surjective() {
                return Err(Error::InvalidPoint(format!("map T{} -> T{} is not surjective", i + 2, i + 1)));
            }
            let upper = &z.levels[i + 1];
            let lower = &z.levels[i];
            for (j, (vu, vl)) in upper.framing.iter().zip(&lower.framing).enumerate() {
                if &pi.matrix().mul_vec(vu) != vl {
                    return Err(Error::InvalidPoint(format!(
                        "framing vector {} is not compatible with the map T{} -> T{}",
                        j + 1,
                        i + 2,
                        i + 1
                    )));
                }
            }
        }
        Ok(z)
    }

    fn assemble(levels: Vec<QuotPoint>, maps: Vec<QMatrix>) -> Result<Self> {
        let Some(first) = levels.first() else {
            return Err(Error::InvalidPoint("a nested point needs at least one level".into()));
        };
        if maps.len() + 1 != levels.len() {
            return Err(Error::InvalidPoint(format!(
                "{} levels need {} maps, got {}",
                levels.len(),
                levels.len() - 1,
                maps.len()
            )));
        }
        let (m, r) = (first.num_vars(), first.rank());
        for (i, level) in levels.iter().enumerate() {
            if level.num_vars() != m || level.rank() != r {
                return Err(Error::InvalidPoint(format!(
                    "level {} has (m, r) = ({}, {}), expected ({m}, {r})",
                    i + 1,
                    level.num_vars(),
                    level.rank()
                )));
            }
        }
        if levels.windows(2).any(|w| w[0].length() > w[1].length()) {
            return Err(Error::InvalidPoint("lengths must be non-decreasing".into()));
        }
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(i, pi)| {
                ModuleMap::new(levels[i + 1].module.clone(), levels[i].module.clone(), pi).map_err(|e| {
                    Error::InvalidPoint(format!("map T{} -> T{}: {e}", i + 2, i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NestedQuotPoint { levels, maps })
    }

    /// The chain of length one.
    pub fn single(p: QuotPoint) -> Self {
        NestedQuotPoint {
            levels: vec![p],
            maps: Vec::new(),
        }
    }

    /// `[O^r ->> T ~> T]`: the point repeated with the identity map.
    pub fn constant(p: QuotPoint, depth: usize) -> Self {
        assert!(depth >= 1, "constant chain of depth 0");
        let id = QMatrix::identity(p.length());
        let maps = (1..depth)
            .map(|_| ModuleMap::new(p.module.clone(), p.module.clone(), id.clone()).expect("identity"))
            .collect();
        NestedQuotPoint {
            levels: vec![p; depth],
            maps,
        }
    }

    pub fn levels(&self) -> &[QuotPoint] {
        &self.levels
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn num_vars(&self) -> usize {
        self.levels[0].num_vars()
    }

    pub fn rank(&self) -> usize {
        self.levels[0].rank()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.levels.iter().map(QuotPoint::length).collect()
    }

    pub fn top(&self) -> &QuotPoint {
        self.levels.last().expect("nonempty chain")
    }

    /// Drops levels of length zero.
    pub fn canonicalize(&self) -> NestedQuotPoint {
        let first = self.levels.iter().position(|l| l.length() > 0).unwrap_or(self.levels.len() - 1);
        NestedQuotPoint {
            levels: self.levels[first..].to_vec(),
            maps: self.maps[first..].to_vec(),
        }
    }

    /// Levelwise gauge transformation by `gs[i]` on `T_{i+1}`.
    pub fn gauge(&self, gs: &[QMatrix]) -> Result<NestedQuotPoint> {
        if gs.len() != self.levels.len() {
            return Err(Error::DimensionMismatch("one gauge matrix per level".into()));
        }
        let levels = self
            .levels
            .iter()
            .zip(gs)
            .map(|(l, g)| l.gauge(g))
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, pi)| {
                let upper_inv = gs[i + 1].inverse().expect("checked by gauge");
                &(&gs[i] * pi.matrix()) * &upper_inv
            })
            .collect();
        Self::assemble(levels, maps)
    }

    pub fn translate(&self, shift: &[Rational]) -> NestedQuotPoint {
        let levels: Vec<QuotPoint> = self.levels.iter().map(|l| l.translate(shift)).collect();
        let maps = self.maps.iter().map(|pi| pi.matrix().clone()).collect();
        Self::assemble(levels, maps).expect("translation preserves the module maps")
    }

    /// Support of the top level, as points with local lengths.
    pub fn support(&self) -> Result<Vec<(Vec<Rational>, usize)>> {
        self.top().module.support()
    }

    /// Splits the chain by the support of `T_d`; every returned chain is
    /// supported at the origin (translated) and keeps all `d` levels, some
    /// possibly of length zero.
    pub fn localize(&self) -> Result<Vec<(Vec<Rational>, NestedQuotPoint)>> {
        let decs = self
            .levels
            .iter()
            .map(|l| SupportDecomposition::new(&l.module))
            .collect::<Result<Vec<_>>>()?;
        let m = self.num_vars();
        let top = decs.last().expect("nonempty chain");
        let mut out = Vec::new();
        for piece in top.pieces() {
            let q = &piece.point;
            let mut levels = Vec::with_capacity(self.levels.len());
            let mut piece_idx = Vec::with_capacity(self.levels.len());
            for (level, dec) in self.levels.iter().zip(&decs) {
                match dec.find(q) {
                    Some(idx) => {
                        let module = dec.local_module(&level.module, idx)?;
                        let framing = level.framing.iter().map(|v| dec.components(v).swap_remove(idx)).collect();
                        levels.push(QuotPoint { module, framing });
                        piece_idx.push(Some(idx));
                    }
                    None => {
                        levels.push(QuotPoint {
                            module: FiniteModule::zero(m),
                            framing: vec![Vec::new(); level.rank()],
                        });
                        piece_idx.push(None);
                    }
                }
            }
            let mut maps = Vec::with_capacity(self.maps.len());
            for (i, pi) in self.maps.iter().enumerate() {
                let rows = levels[i].length();
                let cols = levels[i + 1].length();
                let mut local = QMatrix::zeros(rows, cols);
                if let (Some(lo), Some(up)) = (piece_idx[i], piece_idx[i + 1]) {
                    let upper_basis = decs[i + 1].pieces()[up].subspace.basis();
                    for (c, b) in upper_basis.iter().enumerate() {
                        let comps = decs[i].components(&pi.matrix().mul_vec(b));
                        for (r, x) in comps[lo].iter().enumerate() {
                            local[(r, c)] = x.clone();
                        }
                    }
                }
                maps.push(local);
            }
            out.push((q.clone(), Self::assemble(levels, maps)?));
        }
        Ok(out)
    }

    /// Levelwise framed direct sum of chains with pairwise disjoint top supports.
    pub fn direct_sum(points: &[NestedQuotPoint]) -> Result<NestedQuotPoint> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidPoint("direct sum of no points".into()));
        };
        let supports = points.iter().map(|p| p.support()).collect::<Result<Vec<_>>>()?;
        for (i, a) in supports.iter().enumerate() {
            for b in &supports[i + 1..] {
                if a.iter().any(|(p, _)| b.iter().any(|(q, _)| p == q)) {
                    return Err(Error::OverlappingSupports);
                }
            }
        }
        let d = first.depth();
        if points.iter().any(|p| p.depth() != d) {
            return Err(Error::DimensionMismatch("chains of different depth".into()));
        }
        let mut levels = first.levels.clone();
        let mut maps: Vec<QMatrix> = first.maps.iter().map(|pi| pi.matrix().clone()).collect();
        for p in &points[1..] {
            levels = levels
                .iter()
                .zip(&p.levels)
                .map(|(a, b)| a.direct_sum(b))
                .collect::<Result<Vec<_>>>()?;
            maps = maps
                .iter()
                .zip(&p.maps)
                .map(|(a, b)| a.block_diag(b.matrix()))
                .collect();
        }
        Self::new(levels, maps)
    }
}

/// Levelwise framed direct sum; see [`NestedQuotPoint::direct_sum`].
pub fn direct_sum_points(points: &[NestedQuotPoint]) -> Result<NestedQuotPoint> {
    NestedQuotPoint::direct_sum(points)
}
