//! Torus-fixed points of nested punctual Quot schemes at the origin.
//!
//! A fixed point of `Quot(O^r, n)` is a direct sum of monomial quotients
//! `O/I_1 (+) ... (+) O/I_r`, one per framing slot. In the nested case each slot
//! carries a chain of staircases `lambda_j^1 ⊆ ... ⊆ lambda_j^d` and level `i`
//! has total size `n_i`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bounds::Bounds;
use crate::classify::staircase::{enumerate_staircases, staircases_containing, Staircase};
use crate::error::{Error, Result};
use crate::jet::Exponent;
use crate::linalg::{QMatrix, Rational};
use crate::module::FiniteModule;
use crate::quot::{NestedQuotPoint, QuotPoint};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdealChainPoint {
    num_vars: usize,
    /// `slots[j][i]` is the staircase of slot `j` at level `i`.
    slots: Vec<Vec<Staircase>>,
}

impl MonomialIdealChainPoint {
    pub fn new(num_vars: usize, slots: Vec<Vec<Staircase>>) -> Result<Self> {
        let depth = slots.first().map_or(0, Vec::len);
        if slots.is_empty() || depth == 0 {
            return Err(Error::InvalidPoint("fixed point needs r >= 1 slots and d >= 1 levels".into()));
        }
        for chain in &slots {
            if chain.len() != depth {
                return Err(Error::InvalidPoint("slots have different depths".into()));
            }
            if chain.iter().any(|s| s.num_vars() != num_vars) {
                return Err(Error::InvalidPoint("staircase in the wrong number of variables".into()));
            }
            if chain.windows(2).any(|w| !w[0].is_subset(&w[1])) {
                return Err(Error::InvalidPoint("staircase chain is not nested".into()));
            }
        }
        Ok(MonomialIdealChainPoint { num_vars, slots })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn depth(&self) -> usize {
        self.slots[0].len()
    }

    pub fn slots(&self) -> &[Vec<Staircase>] {
        &self.slots
    }

    pub fn lengths(&self) -> Vec<usize> {
        (0..self.depth())
            .map(|i| self.slots.iter().map(|c| c[i].size()).sum())
            .collect()
    }

    /// Levels joined by `" < "`, slots within a level by `"|"`.
    pub fn identifier(&self) -> String {
        (0..self.depth())
            .map(|i| {
                self.slots
                    .iter()
                    .map(|c| c[i].label())
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect::<Vec<_>>()
            .join(" < ")
    }

    /// Basis of level `i`: the cells of each slot in order.
    fn level_basis(&self, i: usize) -> Vec<(usize, Exponent)> {
        self.slots
            .iter()
            .enumerate()
            .flat_map(|(j, chain)| chain[i].cells().map(move |c| (j, c.clone())))
            .collect()
    }

    fn level_point(&self, i: usize) -> Result<QuotPoint> {
        let basis = self.level_basis(i);
        let n = basis.len();
        let index: HashMap<&(usize, Exponent), usize> = basis.iter().enumerate().map(|(k, b)| (b, k)).collect();
        let actions = (0..self.num_vars)
            .map(|var| {
                let mut a = QMatrix::zeros(n, n);
                for (k, (j, c)) in basis.iter().enumerate() {
                    let mut up = c.clone();
                    up[var] += 1;
                    if let Some(&t) = index.get(&(*j, up)) {
                        a[(t, k)] = Rational::one();
                    }
                }
                a
            })
            .collect();
        let origin = vec![0u32; self.num_vars];
        let framing = (0..self.rank())
            .map(|j| {
                let mut v = vec![Rational::zero(); n];
                if let Some(&k) = index.get(&(j, origin.clone())) {
                    v[k] = Rational::one();
                }
                v
            })
            .collect();
        QuotPoint::new(FiniteModule::new(actions)?, framing)
    }

    /// The nested point with monomial-basis actions, coordinate framings and
    /// projections between levels.
    pub fn to_nested_point(&self) -> Result<NestedQuotPoint> {
        let levels = (0..self.depth()).map(|i| self.level_point(i)).collect::<Result<Vec<_>>>()?;
        let maps = (0..self.depth() - 1)
            .map(|i| {
                let lower = self.level_basis(i);
                let upper = self.level_basis(i + 1);
                let index: HashMap<&(usize, Exponent), usize> =
                    lower.iter().enumerate().map(|(k, b)| (b, k)).collect();
                let mut pi = QMatrix::zeros(lower.len(), upper.len());
                for (k, b) in upper.iter().enumerate() {
                    if let Some(&t) = index.get(b) {
                        pi[(t, k)] = Rational::one();
                    }
                }
                pi
            })
            .collect();
        NestedQuotPoint::new(levels, maps)
    }
}

/// Sequences of per-slot sizes: `out[i][j]` is the size of slot `j` at
/// level `i`, each level summing to `lengths[i]`, each slot non-decreasing.
fn size_profiles(r: usize, lengths: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn compositions(total: usize, parts: usize, floor: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = acc.len();
        if j + 1 == parts {
            if total >= floor[j] {
                acc.push(total);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        let rest_floor: usize = floor[j + 1..].iter().sum();
        for s in floor[j]..=total.saturating_sub(rest_floor) {
            if s + rest_floor > total {
                break;
            }
            acc.push(s);
            compositions(total - s, parts, floor, acc, out);
            acc.pop();
        }
    }
    let mut profiles: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &n in lengths {
        let mut next = Vec::new();
        for prof in &profiles {
            let floor = prof.last().cloned().unwrap_or_else(|| vec![0; r]);
            let mut out = Vec::new();
            compositions(n, r, &floor, &mut Vec::new(), &mut out);
            for c in out {
                let mut p = prof.clone();
                p.push(c);
                next.push(p);
            }
        }
        profiles = next;
    }
    profiles
}

/// Nested staircase chains with the given sizes.
fn chains(m: usize, sizes: &[usize]) -> Vec<Vec<Staircase>> {
    let mut out: Vec<Vec<Staircase>> = enumerate_staircases(m, sizes[0]).into_iter().map(|s| vec![s]).collect();
    for &n in &sizes[1..] {
        out = out
            .into_iter()
            .flat_map(|c| {
                staircases_containing(c.last().expect("nonempty chain"), n).into_iter().map(move |s| {
                    let mut c2 = c.clone();
                    c2.push(s);
                    c2
                })
            })
            .collect();
    }
    out
}

fn validate(m: usize, r: usize, lengths: &[usize]) -> Result<()> {
    if m == 0 || r == 0 || lengths.is_empty() {
        return Err(Error::InvalidTuple(format!(
            "fixed points need m >= 1, r >= 1 and d >= 1, got m={m}, r={r}, lengths {lengths:?}"
        )));
    }
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidTuple(format!("{lengths:?} is not non-decreasing")));
    }
    Ok(())
}

/// Number of fixed points, computed without materializing them.
pub fn count_fixed_points(m: usize, r: usize, lengths: &[usize]) -> Result<usize> {
    validate(m, r, lengths)?;
    let mut memo: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut total: usize = 0;
    for prof in size_profiles(r, lengths) {
        let mut prod: usize = 1;
        for j in 0..r {
            let sizes: Vec<usize> = prof.iter().map(|level| level[j]).collect();
            let c = *memo.entry(sizes.clone()).or_insert_with(|| chains(m, &sizes).len());
            prod = prod.saturating_mul(c);
        }
        total = total.saturating_add(prod);
    }
    Ok(total)
}

/// All torus-fixed points with lengths `lengths`, after checking the count
/// against `bounds`.
pub fn enumerate_fixed_points_bounded(
    m: usize,
    r: usize,
    lengths: &[usize],
    bounds: &Bounds,
) -> Result<Vec<MonomialIdealChainPoint>> {
    bounds.check_fixed_points(count_fixed_points(m, r, lengths)?)?;
    let mut memo: HashMap<Vec<usize>, Vec<Vec<Staircase>>> = HashMap::new();
    let mut out = Vec::new();
    for prof in size_profiles(r, lengths) {
        let per_slot: Vec<Vec<Vec<Staircase>>> = (0..r)
            .map(|j| {
                let sizes: Vec<usize> = prof.iter().map(|level| level[j]).collect();
                memo.entry(sizes.clone()).or_insert_with(|| chains(m, &sizes)).clone()
            })
            .collect();
        let mut partial: Vec<Vec<Vec<Staircase>>> = vec![Vec::new()];
        for options in &per_slot {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |c| {
                        let mut q = p.clone();
                        q.push(c.clone());
                        q
                    })
                })
                .collect();
        }
        for slots in partial {
            out.push(MonomialIdealChainPoint { num_vars: m, slots });
        }
    }
    Ok(out)
}

pub fn enumerate_fixed_points(m: usize, r: usize, lengths: &[usize]) -> Result<Vec<MonomialIdealChainPoint>> {
    enumerate_fixed_points_bounded(m, r, lengths, &Bounds::default())
}
