//! The `nested-quot` command line.
//!
//! Every command prints either a short text report or, with `--format jsonl`,
//! a header record `{"format":"nested-quot-report","version":1}` followed by
//! one JSON object per line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::Bounds;
use crate::classify::{classify, verify_smoothness, witness_singular};
use crate::error::Error;
use crate::ncquot::{commutator_defect, framed_isomorphic, nc_is_stable, ncquot_dim, NCQuotPoint};
use crate::point_file::{write_nested, PointFile};
use crate::quot::{expdim, nested_tangent_dim, TangentReport};

pub const REPORT_FORMAT: &str = "nested-quot-report";
pub const REPORT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INVALID_POINT: i32 = 4;
pub const EXIT_UNSUPPORTED: i32 = 5;
pub const EXIT_RESOURCE: i32 = 6;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::InvalidTuple(_) => EXIT_USAGE,
        Error::Parse { .. } => EXIT_PARSE,
        Error::DimensionMismatch(_)
        | Error::NotCommuting(..)
        | Error::NotStable { .. }
        | Error::InvalidPoint(_)
        | Error::NotInSupport(_)
        | Error::NotLocal
        | Error::TruncationTooSmall { .. }
        | Error::OverlappingSupports => EXIT_INVALID_POINT,
        Error::Unsupported(_) | Error::NotSingular | Error::IrrationalSupport => EXIT_UNSUPPORTED,
        Error::ResourceBound { .. } => EXIT_RESOURCE,
    }
}

#[derive(Parser, Debug)]
#[command(name = "nested-quot", version, about = "Tangent spaces and smoothness of nested punctual Quot schemes of A^m")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Args, Debug)]
struct Shape {
    /// Number of variables m.
    #[arg(short = 'm', long = "vars")]
    m: usize,
    /// Rank r of the free module.
    #[arg(short = 'r', long = "rank")]
    r: usize,
    /// Lengths n_1 <= ... <= n_d, comma separated.
    #[arg(short = 'n', long = "lengths", value_delimiter = ',', required = true)]
    n: Vec<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide smoothness from (m, r, lengths).
    Classify(Shape),
    /// Tangent dimension at the point stored in a point file.
    Tangent {
        file: PathBuf,
        /// Also print the size of the matrix whose kernel is the tangent space.
        #[arg(long)]
        delta: bool,
    },
    /// Write a point at which the scheme is singular.
    Witness {
        #[command(flatten)]
        shape: Shape,
        /// Destination file; standard output when absent.
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Tangent dimensions at every torus-fixed point.
    Verify {
        #[command(flatten)]
        shape: Shape,
        /// Largest jet algebra dimension allowed.
        #[arg(long)]
        max_jet_dim: Option<usize>,
        /// Largest number of fixed points allowed.
        #[arg(long)]
        max_fixed_points: Option<usize>,
    },
    /// Matrix-and-vector data without commutation relations.
    #[command(subcommand)]
    Ncquot(NcCommand),
}

#[derive(Subcommand, Debug)]
enum NcCommand {
    /// (m - 1) n^2 + r n.
    Dim {
        #[arg(short = 'm', long = "vars")]
        m: usize,
        #[arg(short = 'n', long = "length")]
        n: usize,
        #[arg(short = 'r', long = "rank")]
        r: usize,
    },
    /// Whether the framing generates under all words in the actions.
    Stable { file: PathBuf },
    /// Ranks of the commutators [A_i, A_j], i < j.
    Defect { file: PathBuf },
    /// The intertwiner between two framed data, if one exists.
    Iso { first: PathBuf, second: PathBuf },
}

struct Output<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn header(&mut self) -> std::io::Result<()> {
        if self.format == Format::Jsonl {
            writeln!(self.out, "{}", json!({"format": REPORT_FORMAT, "version": REPORT_VERSION}))?;
        }
        Ok(())
    }

    fn record(&mut self, value: serde_json::Value) -> std::io::Result<()> {
        writeln!(self.out, "{value}")
    }

    fn text(&self) -> bool {
        self.format == Format::Text
    }
}

fn read_point_file(path: &Path) -> Result<PointFile, Error> {
    PointFile::parse(&std::fs::read_to_string(path)?)
}

fn tangent_json(rep: &TangentReport) -> serde_json::Value {
    serde_json::to_value(rep).expect("report serializes")
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report serializes")
}

/// Runs the command line with `args` (including the program name).
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let mut output = Output { format: cli.format, out };
    match execute(cli.command, &mut output) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, o: &mut Output<'_>) -> Result<(), Error> {
    o.header()?;
    match command {
        Command::Classify(Shape { m, r, n }) => {
            let v = classify(m, r, &n)?;
            let e = expdim(m, r, &v.normalized_n)?;
            if o.text() {
                writeln!(o.out, "{} ({})", if v.smooth { "smooth" } else { "singular" }, v.case_label)?;
                writeln!(o.out, "normalized lengths: {:?}", v.normalized_n)?;
                writeln!(o.out, "expected dimension: {e}")?;
            } else {
                o.record(json!({
                    "kind": "classification",
                    "m": m, "r": r, "lengths": n,
                    "smooth": v.smooth,
                    "case_label": v.case_label,
                    "normalized_n": v.normalized_n,
                    "expected_dim": e,
                }))?;
            }
        }
        Command::Tangent { file, delta } => {
            let z = read_point_file(&file)?.to_nested()?;
            let rep = nested_tangent_dim(&z)?;
            if o.text() {
                writeln!(o.out, "tangent dimension: {}", rep.tangent_dim)?;
                writeln!(o.out, "expected dimension: {}", rep.expected_dim)?;
                writeln!(o.out, "verdict: {}", rep.verdict.as_str())?;
                if delta {
                    writeln!(o.out, "delta: {} x {}", rep.delta_target, rep.delta_domain)?;
                }
            } else {
                let mut v = tangent_json(&rep);
                v["kind"] = json!("tangent");
                if !delta {
                    let obj = v.as_object_mut().expect("object");
                    obj.remove("delta_domain");
                    obj.remove("delta_target");
                }
                o.record(v)?;
            }
        }
        Command::Witness { shape, out } => {
            let z = witness_singular(shape.m, shape.r, &shape.n)?;
            let text = write_nested(&z);
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    if o.text() {
                        writeln!(o.out, "wrote {} (lengths {:?})", path.display(), z.lengths())?;
                    } else {
                        o.record(json!({"kind": "witness", "path": path, "lengths": z.lengths()}))?;
                    }
                }
                None if o.text() => write!(o.out, "{text}")?,
                None => o.record(json!({"kind": "witness", "lengths": z.lengths(), "point": text}))?,
            }
        }
        Command::Verify {
            shape,
            max_jet_dim,
            max_fixed_points,
        } => {
            let mut bounds = Bounds::from_env()?;
            if let Some(b) = max_jet_dim {
                bounds.max_jet_dim = b;
            }
            if let Some(b) = max_fixed_points {
                bounds.max_fixed_points = b;
            }
            let rep = verify_smoothness(shape.m, shape.r, &shape.n, &bounds)?;
            if o.text() {
                writeln!(o.out, "{:<40} {:>7} {:>8}  verdict", "fixed point", "tangent", "expected")?;
                for rec in &rep.records {
                    writeln!(
                        o.out,
                        "{:<40} {:>7} {:>8}  {}",
                        rec.id,
                        rec.tangent_dim,
                        rec.expected_dim,
                        rec.verdict.as_str()
                    )?;
                }
                writeln!(
                    o.out,
                    "{}: {} fixed points, max tangent {}, expected {}",
                    rep.outcome,
                    rep.fixed_points(),
                    rep.max_tangent_dim,
                    rep.expected_dim
                )?;
                writeln!(
                    o.out,
                    "classification: {} ({}){}",
                    if rep.classification.smooth { "smooth" } else { "singular" },
                    rep.classification.case_label,
                    if rep.agrees { "" } else { ", DISAGREES with the sweep" }
                )?;
            } else {
                for rec in &rep.records {
                    let mut v = to_value(rec);
                    v["kind"] = json!("fixed_point");
                    o.record(v)?;
                }
                o.record(json!({
                    "kind": "sweep",
                    "m": rep.m, "r": rep.r, "lengths": rep.lengths,
                    "fixed_points": rep.fixed_points(),
                    "max_tangent_dim": rep.max_tangent_dim,
                    "expected_dim": rep.expected_dim,
                    "outcome": rep.outcome,
                    "case_label": rep.classification.case_label,
                    "smooth": rep.classification.smooth,
                    "agrees": rep.agrees,
                }))?;
            }
        }
        Command::Ncquot(nc) => ncquot(nc, o)?,
    }
    Ok(())
}

fn read_nc(path: &Path) -> Result<NCQuotPoint, Error> {
    read_point_file(path)?.to_ncquot()
}

fn ncquot(command: NcCommand, o: &mut Output<'_>) -> Result<(), Error> {
    match command {
        NcCommand::Dim { m, n, r } => {
            let d = ncquot_dim(m, n, r);
            if o.text() {
                writeln!(o.out, "{d}")?;
            } else {
                o.record(json!({"kind": "ncquot_dim", "m": m, "n": n, "r": r, "dim": d}))?;
            }
        }
        NcCommand::Stable { file } => {
            let stable = nc_is_stable(&read_nc(&file)?);
            if o.text() {
                writeln!(o.out, "{}", if stable { "stable" } else { "unstable" })?;
            } else {
                o.record(json!({"kind": "ncquot_stable", "stable": stable}))?;
            }
        }
        NcCommand::Defect { file } => {
            let ranks = commutator_defect(&read_nc(&file)?);
            if o.text() {
                let s: Vec<String> = ranks.iter().map(usize::to_string).collect();
                writeln!(o.out, "commutator ranks: [{}]", s.join(", "))?;
                writeln!(o.out, "commuting: {}", ranks.iter().all(|&k| k == 0))?;
            } else {
                o.record(json!({"kind": "ncquot_defect", "ranks": ranks}))?;
            }
        }
        NcCommand::Iso { first, second } => {
            let (p, q) = (read_nc(&first)?, read_nc(&second)?);
            for (path, x) in [(&first, &p), (&second, &q)] {
                if !nc_is_stable(x) {
                    return Err(Error::InvalidPoint(format!("{} is not stable", path.display())));
                }
            }
            let g = framed_isomorphic(&p, &q);
            let rows: Option<Vec<Vec<String>>> = g.as_ref().map(|g| {
                g.row_vecs()
                    .iter()
                    .map(|row| row.iter().map(crate::linalg::format_rational).collect())
                    .collect()
            });
            if o.text() {
                match &rows {
                    Some(rows) => {
                        writeln!(o.out, "isomorphic")?;
                        for row in rows {
                            writeln!(o.out, "{}", row.join(" "))?;
                        }
                    }
                    None => writeln!(o.out, "not isomorphic")?,
                }
            } else {
                o.record(json!({"kind": "ncquot_iso", "isomorphic": rows.is_some(), "intertwiner": rows}))?;
            }
        }
    }
    Ok(())
}
