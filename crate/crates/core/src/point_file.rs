//! Text format for framed points, nested chains and raw matrix data.
//!
//! ```text
//! nested-quot-point 1
//! # comments run to the end of the line
//! m 2
//! r 2
//! d 2
//! lengths 1 2
//! level 1
//! action 1
//! 0
//! action 2
//! 0
//! framing
//! 1
//! 0
//! level 2
//! action 1
//! 0 0
//! 0 0
//! action 2
//! 0 0
//! 0 0
//! framing
//! 1 0
//! 0 1
//! map 1
//! 1 0
//! ```
//!
//! Each `action k` block holds `n_i` rows of `n_i` entries. The `framing`
//! block holds `r` rows, row `j` being the image of the `j`-th generator.
//! Each `map i` block holds the `n_i x n_{i+1}` matrix of `T_{i+1} ->> T_i`.
//! Entries are integers or fractions `p/q`. Fractions are reduced on load.
//! A row with no entries (a level of length zero) is written as `.`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, QMatrix, Rational};
use crate::module::FiniteModule;
use crate::ncquot::NCQuotPoint;
use crate::quot::{NestedQuotPoint, QuotPoint};

pub const HEADER: &str = "nested-quot-point";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelData {
    pub actions: Vec<QMatrix>,
    pub framing: Vec<Vec<Rational>>,
}

/// The contents of a point file, checked for shape but not for meaning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFile {
    pub m: usize,
    pub r: usize,
    pub lengths: Vec<usize>,
    pub levels: Vec<LevelData>,
    pub maps: Vec<QMatrix>,
}

impl PointFile {
    pub fn from_nested(z: &NestedQuotPoint) -> Self {
        PointFile {
            m: z.num_vars(),
            r: z.rank(),
            lengths: z.lengths(),
            levels: z
                .levels()
                .iter()
                .map(|l| LevelData {
                    actions: l.module().actions().to_vec(),
                    framing: l.framing().to_vec(),
                })
                .collect(),
            maps: z.maps().iter().map(|p| p.matrix().clone()).collect(),
        }
    }

    pub fn from_ncquot(p: &NCQuotPoint) -> Self {
        PointFile {
            m: p.num_vars(),
            r: p.rank(),
            lengths: vec![p.n()],
            levels: vec![LevelData {
                actions: p.actions().to_vec(),
                framing: p.framing().to_vec(),
            }],
            maps: Vec::new(),
        }
    }

    /// Validates commuting, stability and the chain conditions.
    pub fn to_nested(&self) -> Result<NestedQuotPoint> {
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let module = FiniteModule::new(l.actions.clone()).map_err(|e| level_error(i, e))?;
                QuotPoint::new(module, l.framing.clone()).map_err(|e| level_error(i, e))
            })
            .collect::<Result<Vec<_>>>()?;
        NestedQuotPoint::new(levels, self.maps.clone())
    }

    /// Raw data of a single-level file; commutation is not required.
    pub fn to_ncquot(&self) -> Result<NCQuotPoint> {
        if self.levels.len() != 1 {
            return Err(Error::InvalidPoint(format!(
                "matrix data needs exactly one level, the file has {}",
                self.levels.len()
            )));
        }
        let l = &self.levels[0];
        NCQuotPoint::new(self.lengths[0], l.actions.clone(), l.framing.clone())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{HEADER} {VERSION}");
        let _ = writeln!(s, "m {}", self.m);
        let _ = writeln!(s, "r {}", self.r);
        let _ = writeln!(s, "d {}", self.lengths.len());
        let lengths: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "lengths {}", lengths.join(" "));
        for (i, level) in self.levels.iter().enumerate() {
            let _ = writeln!(s, "level {}", i + 1);
            for (k, a) in level.actions.iter().enumerate() {
                let _ = writeln!(s, "action {}", k + 1);
                write_rows(&mut s, &a.row_vecs());
            }
            let _ = writeln!(s, "framing");
            write_rows(&mut s, &level.framing);
        }
        for (i, pi) in self.maps.iter().enumerate() {
            let _ = writeln!(s, "map {}", i + 1);
            write_rows(&mut s, &pi.row_vecs());
        }
        s
    }

    pub fn parse(text: &str) -> Result<PointFile> {
        Parser::new(text).file()
    }
}

fn level_error(i: usize, e: Error) -> Error {
    Error::InvalidPoint(format!("level {}: {e}", i + 1))
}

fn write_rows(s: &mut String, rows: &[Vec<Rational>]) {
    for row in rows {
        if row.is_empty() {
            s.push_str(".\n");
        } else {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
    }
}

pub fn write_nested(z: &NestedQuotPoint) -> String {
    PointFile::from_nested(z).to_text()
}

pub fn read_nested(text: &str) -> Result<NestedQuotPoint> {
    PointFile::parse(text)?.to_nested()
}

struct Parser<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let content = l.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = content.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Parser { lines, pos: 0 }
    }

    fn err<T>(&self, line: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line,
            message: message.into(),
        })
    }

    fn next_line(&mut self, expecting: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.clone())
            }
            None => {
                let last = self.lines.last().map_or(0, |l| l.0);
                self.err(last, format!("unexpected end of file, expected {expecting}"))
            }
        }
    }

    /// A line `keyword value...`, returning the values.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        let (line, tokens) = self.next_line(&format!("`{keyword}`"))?;
        if tokens[0] != keyword {
            return self.err(line, format!("expected `{keyword}`, found `{}`", tokens[0]));
        }
        Ok((line, tokens[1..].to_vec()))
    }

    fn integer(&self, line: usize, tok: &str, what: &str) -> Result<usize> {
        tok.parse()
            .or_else(|_| self.err(line, format!("{what} must be a nonnegative integer, found `{tok}`")))
    }

    fn single_integer(&mut self, keyword: &str) -> Result<usize> {
        let (line, vals) = self.keyword(keyword)?;
        if vals.len() != 1 {
            return self.err(line, format!("`{keyword}` takes one value"));
        }
        self.integer(line, vals[0], keyword)
    }

    fn indexed(&mut self, keyword: &str, expected: usize) -> Result<()> {
        let (line, vals) = self.keyword(keyword)?;
        if vals.len() != 1 || self.integer(line, vals[0], keyword)? != expected {
            return self.err(line, format!("expected `{keyword} {expected}`"));
        }
        Ok(())
    }

    fn rows(&mut self, count: usize, width: usize, what: &str) -> Result<Vec<Vec<Rational>>> {
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let (line, tokens) = self.next_line(&format!("row {} of {what}", k + 1))?;
            let row: Vec<Rational> = if tokens == ["."] {
                Vec::new()
            } else {
                tokens
                    .iter()
                    .map(|t| {
                        parse_rational(t).map_err(|e| match e {
                            Error::Parse { message, .. } => Error::Parse { line, message },
                            other => other,
                        })
                    })
                    .collect::<Result<_>>()?
            };
            if row.len() != width {
                return self.err(line, format!("row {} of {what} has {} entries, expected {width}", k + 1, row.len()));
            }
            out.push(row);
        }
        Ok(out)
    }

    fn matrix(&mut self, rows: usize, cols: usize, what: &str) -> Result<QMatrix> {
        let data = self.rows(rows, cols, what)?;
        Ok(QMatrix::from_rows(cols, &data).expect("rows checked"))
    }

    fn file(mut self) -> Result<PointFile> {
        let (line, vals) = self.keyword(HEADER)?;
        if vals != [VERSION.to_string().as_str()] {
            return self.err(line, format!("unsupported format version {vals:?}, expected {VERSION}"));
        }
        let m = self.single_integer("m")?;
        let r = self.single_integer("r")?;
        let d = self.single_integer("d")?;
        if m == 0 || r == 0 || d == 0 {
            return self.err(self.lines[self.pos - 1].0, "m, r and d must be positive");
        }
        let (line, vals) = self.keyword("lengths")?;
        if vals.len() != d {
            return self.err(line, format!("`lengths` has {} values, expected d = {d}", vals.len()));
        }
        let lengths = vals
            .iter()
            .map(|t| self.integer(line, t, "length"))
            .collect::<Result<Vec<_>>>()?;
        let mut levels = Vec::with_capacity(d);
        for (i, &n) in lengths.iter().enumerate() {
            self.indexed("level", i + 1)?;
            let mut actions = Vec::with_capacity(m);
            for k in 0..m {
                self.indexed("action", k + 1)?;
                actions.push(self.matrix(n, n, &format!("action {} of level {}", k + 1, i + 1))?);
            }
            let (line, vals) = self.keyword("framing")?;
            if !vals.is_empty() {
                return self.err(line, "`framing` takes no values");
            }
            let framing = self.rows(r, n, &format!("framing of level {}", i + 1))?;
            levels.push(LevelData { actions, framing });
        }
        let mut maps = Vec::with_capacity(d - 1);
        for i in 0..d - 1 {
            self.indexed("map", i + 1)?;
            maps.push(self.matrix(lengths[i], lengths[i + 1], &format!("map {}", i + 1))?);
        }
        if let Some((line, tokens)) = self.lines.get(self.pos) {
            return self.err(*line, format!("unexpected trailing content `{}`", tokens.join(" ")));
        }
        Ok(PointFile {
            m,
            r,
            lengths,
            levels,
            maps,
        })
    }
}
