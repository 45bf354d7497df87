//! Order ideals in `N^m` (staircases), i.e. exponent sets of monomials
//! outside a monomial ideal of finite colength.

use std::collections::BTreeSet;

use crate::jet::Exponent;

/// A finite order ideal in `N^m`, cells kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Staircase {
    num_vars: usize,
    cells: BTreeSet<Exponent>,
}

impl Staircase {
    pub fn empty(num_vars: usize) -> Self {
        Staircase {
            num_vars,
            cells: BTreeSet::new(),
        }
    }

    /// Returns `None` unless `cells` is closed under componentwise decrease.
    pub fn from_cells(num_vars: usize, cells: impl IntoIterator<Item = Exponent>) -> Option<Self> {
        let cells: BTreeSet<Exponent> = cells.into_iter().collect();
        if cells.iter().any(|c| c.len() != num_vars) {
            return None;
        }
        let s = Staircase { num_vars, cells };
        s.is_order_ideal().then_some(s)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Exponent> {
        self.cells.iter()
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        self.cells.contains(e)
    }

    pub fn is_subset(&self, other: &Staircase) -> bool {
        self.cells.is_subset(&other.cells)
    }

    fn is_order_ideal(&self) -> bool {
        self.cells.iter().all(|c| {
            (0..self.num_vars).all(|i| {
                c[i] == 0 || {
                    let mut d = c.clone();
                    d[i] -= 1;
                    self.cells.contains(&d)
                }
            })
        })
    }

    /// Cells outside the staircase whose addition keeps it an order ideal.
    pub fn addable_cells(&self) -> Vec<Exponent> {
        let mut candidates: BTreeSet<Exponent> = BTreeSet::new();
        if self.cells.is_empty() {
            candidates.insert(vec![0; self.num_vars]);
        }
        for c in &self.cells {
            for i in 0..self.num_vars {
                let mut d = c.clone();
                d[i] += 1;
                candidates.insert(d);
            }
        }
        candidates
            .into_iter()
            .filter(|d| {
                !self.cells.contains(d)
                    && (0..self.num_vars).all(|i| {
                        d[i] == 0 || {
                            let mut e = d.clone();
                            e[i] -= 1;
                            self.cells.contains(&e)
                        }
                    })
            })
            .collect()
    }

    pub fn with_cell(&self, cell: Exponent) -> Staircase {
        let mut s = self.clone();
        s.cells.insert(cell);
        s
    }

    /// Compact text form, e.g. `{00,10,01}`; exponents above 9 are comma separated.
    pub fn label(&self) -> String {
        let wide = self.cells.iter().flatten().any(|&e| e > 9);
        let cells: Vec<String> = self
            .cells
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                if wide {
                    format!("({})", parts.join(","))
                } else {
                    parts.concat()
                }
            })
            .collect();
        format!("{{{}}}", cells.join(","))
    }
}

/// All order ideals of size `n` in `N^m`.
pub fn enumerate_staircases(m: usize, n: usize) -> Vec<Staircase> {
    let mut layer: BTreeSet<Staircase> = BTreeSet::new();
    layer.insert(Staircase::empty(m));
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for s in &layer {
            for c in s.addable_cells() {
                next.insert(s.with_cell(c));
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}

/// All order ideals of size `n` containing `inner`.
pub fn staircases_containing(inner: &Staircase, n: usize) -> Vec<Staircase> {
    if n < inner.size() {
        return Vec::new();
    }
    let mut layer: BTreeSet<Staircase> = BTreeSet::new();
    layer.insert(inner.clone());
    for _ in inner.size()..n {
        let mut next = BTreeSet::new();
        for s in &layer {
            for c in s.addable_cells() {
                next.insert(s.with_cell(c));
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}
