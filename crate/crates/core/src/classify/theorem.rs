//! Smoothness of nested punctual Quot schemes as a decision table.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which of the singular families from the rank-one classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheahCase {
    /// (i) three or more distinct nonzero lengths.
    DepthAtLeastThree,
    /// (ii) surfaces, two lengths with gap at least two.
    SurfaceGap,
    /// (iii) dimension at least three, one length at least four.
    HigherDimLong,
    /// (iv) dimension at least three, two lengths other than (1,2), (2,3).
    HigherDimNested,
}

impl CheahCase {
    pub fn roman(&self) -> &'static str {
        match self {
            CheahCase::DepthAtLeastThree => "i",
            CheahCase::SurfaceGap => "ii",
            CheahCase::HigherDimLong => "iii",
            CheahCase::HigherDimNested => "iv",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Curve,
    ProjBundle,
    Fogarty,
    SurfaceNested,
    HigherDim3,
    HigherDimNested,
    SingularA,
    SingularB,
    SingularCheah(CheahCase),
}

impl CaseLabel {
    pub fn is_smooth(&self) -> bool {
        !matches!(
            self,
            CaseLabel::SingularA | CaseLabel::SingularB | CaseLabel::SingularCheah(_)
        )
    }

    pub fn parse(s: &str) -> Option<CaseLabel> {
        Some(match s {
            "Curve(1)" => CaseLabel::Curve,
            "ProjBundle(2)" => CaseLabel::ProjBundle,
            "Fogarty(3a)" => CaseLabel::Fogarty,
            "SurfaceNested(3b)" => CaseLabel::SurfaceNested,
            "HigherDim3(3c)" => CaseLabel::HigherDim3,
            "HigherDimNested(3d)" => CaseLabel::HigherDimNested,
            "Singular-A" => CaseLabel::SingularA,
            "Singular-B" => CaseLabel::SingularB,
            "Singular-Cheah(i)" => CaseLabel::SingularCheah(CheahCase::DepthAtLeastThree),
            "Singular-Cheah(ii)" => CaseLabel::SingularCheah(CheahCase::SurfaceGap),
            "Singular-Cheah(iii)" => CaseLabel::SingularCheah(CheahCase::HigherDimLong),
            "Singular-Cheah(iv)" => CaseLabel::SingularCheah(CheahCase::HigherDimNested),
            _ => return None,
        })
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Curve => write!(f, "Curve(1)"),
            CaseLabel::ProjBundle => write!(f, "ProjBundle(2)"),
            CaseLabel::Fogarty => write!(f, "Fogarty(3a)"),
            CaseLabel::SurfaceNested => write!(f, "SurfaceNested(3b)"),
            CaseLabel::HigherDim3 => write!(f, "HigherDim3(3c)"),
            CaseLabel::HigherDimNested => write!(f, "HigherDimNested(3d)"),
            CaseLabel::SingularA => write!(f, "Singular-A"),
            CaseLabel::SingularB => write!(f, "Singular-B"),
            CaseLabel::SingularCheah(c) => write!(f, "Singular-Cheah({})", c.roman()),
        }
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub smooth: bool,
    pub case_label: CaseLabel,
    pub normalized_n: Vec<usize>,
}

/// Drops zeros and repeated lengths from a non-decreasing tuple.
///
/// A level of length zero carries no data and `T_{i+1} ->> T_i` between
/// modules of equal length is an isomorphism, so both can be removed.
pub fn canonicalize(lengths: &[usize]) -> Result<Vec<usize>> {
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidTuple(format!("{lengths:?} is not non-decreasing")));
    }
    let mut out: Vec<usize> = lengths.iter().copied().filter(|&n| n > 0).collect();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidTuple(format!("{lengths:?} has no nonzero length")));
    }
    Ok(out)
}

pub fn classify(m: usize, r: usize, lengths: &[usize]) -> Result<ClassificationVerdict> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidTuple(format!("need m >= 1 and r >= 1, got m={m}, r={r}")));
    }
    let n = canonicalize(lengths)?;
    let label = decide(m, r, &n);
    Ok(ClassificationVerdict {
        smooth: label.is_smooth(),
        case_label: label,
        normalized_n: n,
    })
}

fn decide(m: usize, r: usize, n: &[usize]) -> CaseLabel {
    let d = n.len();
    let last = n[d - 1];
    if m == 1 {
        return CaseLabel::Curve;
    }
    if last == 1 {
        return CaseLabel::ProjBundle;
    }
    if r == 1 {
        match (m, d) {
            (2, 1) => return CaseLabel::Fogarty,
            (2, 2) if n[1] == n[0] + 1 => return CaseLabel::SurfaceNested,
            (_, 1) if m >= 3 && last <= 3 => return CaseLabel::HigherDim3,
            (_, 2) if m >= 3 && (n == [1, 2] || n == [2, 3]) => return CaseLabel::HigherDimNested,
            _ => {}
        }
    } else {
        if d == 1 {
            return CaseLabel::SingularA;
        }
        if d == 2 && n[1] == n[0] + 1 {
            return CaseLabel::SingularB;
        }
    }
    let cheah = if d >= 3 {
        CheahCase::DepthAtLeastThree
    } else if m == 2 {
        CheahCase::SurfaceGap
    } else if d == 1 {
        CheahCase::HigherDimLong
    } else {
        CheahCase::HigherDimNested
    };
    CaseLabel::SingularCheah(cheah)
}
