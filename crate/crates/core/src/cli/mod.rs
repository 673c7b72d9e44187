//! Batch front end: argument parsing, job execution, output rendering.

mod cache;
mod selfcheck;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cache::{Cache, CACHE_FORMAT};
pub use selfcheck::{run_selfcheck, CheckOutcome};

use crate::jones::{degree_report, jones_rosso, jones_t2b, ColoredJonesResult, JonesError, TorusKnotSpec, Variable};
use crate::laurent::ScaledLaurent;
use crate::plethysm2::psi2_closed;
use crate::sl3rep::{qdim_closed, twist_monomial, Weight};

/// Default bound on `m1`, `m2` and table ranges.
pub const DEFAULT_LIMIT: u32 = 100;

pub const CACHE_ENV: &str = "SL3JONES_CACHE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Consistency(#[from] JonesError),
    #[error("self-check failed: {0} propert{s} did not hold", s = if *.0 == 1 { "y" } else { "ies" })]
    SelfcheckFailed(usize),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Consistency(
                JonesError::NotCoprime { .. } | JonesError::EvenStrands(_) | JonesError::NonPositive { .. },
            ) => 2,
            CliError::Consistency(_) | CliError::SelfcheckFailed(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VarArg {
    Q,
    Qinv,
}

impl From<VarArg> for Variable {
    fn from(v: VarArg) -> Self {
        match v {
            VarArg::Q => Variable::Q,
            VarArg::Qinv => Variable::QInverse,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "sl3jones", version, about = "Exact sl3 colored Jones polynomials of torus knots")]
pub struct Args {
    #[command(subcommand)]
    pub command: CommandArgs,
    /// Variable of emitted polynomials.
    #[arg(long = "var", value_enum, default_value = "q", global = true)]
    pub var: VarArg,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Cache rendered results in this directory.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Upper bound accepted for m1, m2 and --max.
    #[arg(long, default_value_t = DEFAULT_LIMIT, global = true)]
    pub limit: u32,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Colored Jones polynomial of T(a,b).
    Jones {
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
    /// Closed-form second Adams operation of V_{m1,m2}.
    Plethysm {
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
    /// Quantum dimension of V_{m1,m2}.
    Qdim {
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
    /// Twist monomial theta^(num/den) of V_{m1,m2}.
    Twist {
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        num: i64,
        #[arg(long, default_value_t = 1)]
        den: i64,
    },
    /// Degree span and coefficient extremes of a colored Jones polynomial.
    Degrees {
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
    /// One row per color (m1, m2) in [0, max]^2 for T(2,b).
    Table {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        max: u32,
        /// Append the full polynomial to each row.
        #[arg(long)]
        full: bool,
        /// Worker threads; 1 evaluates serially, 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Cross-formula and oracle-equivalence checks.
    Selfcheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Jones { knot: (u32, u32), color: Weight },
    Plethysm { color: Weight },
    Qdim { color: Weight },
    Twist { color: Weight, num: i64, den: i64 },
    Degrees { knot: (u32, u32), color: Weight },
    Table { b: u32, max: u32, full: bool, jobs: usize },
    Selfcheck,
}

/// A fully validated unit of work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub variable: Variable,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl JobSpec {
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let limit = args.limit;
        let color = |m1: u32, m2: u32| {
            if m1 > limit || m2 > limit {
                Err(CliError::Usage(format!("color ({m1},{m2}) exceeds limit {limit}")))
            } else {
                Ok(Weight::new(m1, m2))
            }
        };
        let command = match args.command {
            CommandArgs::Jones { a, b, m1, m2 } => Command::Jones { knot: (a, b), color: color(m1, m2)? },
            CommandArgs::Plethysm { m1, m2 } => Command::Plethysm { color: color(m1, m2)? },
            CommandArgs::Qdim { m1, m2 } => Command::Qdim { color: color(m1, m2)? },
            CommandArgs::Twist { m1, m2, num, den } => {
                if den != 1 && den != 2 {
                    return Err(CliError::Usage(format!("--den must be 1 or 2, got {den}")));
                }
                Command::Twist { color: color(m1, m2)?, num, den }
            }
            CommandArgs::Degrees { a, b, m1, m2 } => Command::Degrees { knot: (a, b), color: color(m1, m2)? },
            CommandArgs::Table { b, max, full, jobs } => {
                if max > limit {
                    return Err(CliError::Usage(format!("--max {max} exceeds limit {limit}")));
                }
                Command::Table { b, max, full, jobs }
            }
            CommandArgs::Selfcheck => Command::Selfcheck,
        };
        let format = args.format.unwrap_or(match command {
            Command::Table { .. } => Format::Csv,
            _ => Format::Text,
        });
        Ok(JobSpec { command, variable: args.var.into(), format, output: args.output, cache_dir: args.cache_dir })
    }

    pub fn parse_from<I, T>(argv: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let args = Args::try_parse_from(argv)?;
        JobSpec::from_args(args).map_err(|e| clap::Error::raw(clap::error::ErrorKind::ValueValidation, e.to_string()))
    }

    /// Canonical string of everything that determines the output bytes.
    /// `jobs` is excluded: tables are identical at any parallelism.
    pub fn canonical_key(&self) -> String {
        let cmd = match &self.command {
            Command::Jones { knot, color } => {
                format!("jones;a={};b={};m1={};m2={}", knot.0, knot.1, color.m1, color.m2)
            }
            Command::Plethysm { color } => format!("plethysm;m1={};m2={}", color.m1, color.m2),
            Command::Qdim { color } => format!("qdim;m1={};m2={}", color.m1, color.m2),
            Command::Twist { color, num, den } => {
                format!("twist;m1={};m2={};num={num};den={den}", color.m1, color.m2)
            }
            Command::Degrees { knot, color } => {
                format!("degrees;a={};b={};m1={};m2={}", knot.0, knot.1, color.m1, color.m2)
            }
            Command::Table { b, max, full, .. } => format!("table;b={b};max={max};full={full}"),
            Command::Selfcheck => "selfcheck".to_string(),
        };
        format!("cmd={cmd};var={};format={:?}", self.variable.as_str(), self.format).to_lowercase()
    }
}

fn compute_jones(knot: (u32, u32), color: Weight) -> Result<ColoredJonesResult, JonesError> {
    let spec = TorusKnotSpec::new(knot.0, knot.1)?;
    if spec.a() == 2 {
        jones_t2b(spec.b(), color)
    } else {
        jones_rosso(spec, color)
    }
}

fn laurent_rows(p: &ScaledLaurent) -> String {
    let mut out = String::from("exponent,coefficient\n");
    let d = i64::from(p.scale());
    for (e, c) in p.terms() {
        let _ = writeln!(out, "{},{c}", crate::laurent::fmt_exponent(num_rational::Ratio::new(*e, d)));
    }
    out
}

fn render_laurent(p: &ScaledLaurent, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(&p.to_json()).expect("serializable")),
        Format::Csv => laurent_rows(p),
    }
}

/// One CSV/JSON row of the `table` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m1: u32,
    pub m2: u32,
    pub min_deg: String,
    pub max_deg: String,
    pub min_coeff: String,
    pub max_coeff: String,
    pub term_count: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<String>,
}

fn table_row(b: u32, color: Weight, variable: Variable, full: bool) -> Result<TableRow, JonesError> {
    let r = jones_t2b(b, color)?.in_variable(variable);
    let rep = degree_report(&r)?;
    Ok(TableRow {
        m1: color.m1,
        m2: color.m2,
        min_deg: rep.min_deg.to_string(),
        max_deg: rep.max_deg.to_string(),
        min_coeff: rep.min_coeff.to_string(),
        max_coeff: rep.max_coeff.to_string(),
        term_count: rep.term_count,
        polynomial: full.then(|| r.value.to_string()),
    })
}

/// Evaluates every cell of the table, in row-major `(m1, m2)` order.
pub fn table_rows(b: u32, max: u32, variable: Variable, full: bool, jobs: usize) -> Result<Vec<TableRow>, JonesError> {
    let cells: Vec<Weight> = (0..=max).flat_map(|m1| (0..=max).map(move |m2| Weight::new(m1, m2))).collect();
    if jobs == 1 {
        return cells.into_iter().map(|w| table_row(b, w, variable, full)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| {
        log::warn!("falling back to the global thread pool: {e}");
        e
    });
    let run = || cells.par_iter().map(|&w| table_row(b, w, variable, full)).collect();
    match pool {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

fn render_table(rows: &[TableRow], format: Format, full: bool) -> String {
    if format == Format::Json {
        return format!("{}\n", serde_json::to_string(rows).expect("serializable"));
    }
    let mut out = String::from("m1,m2,min_deg,max_deg,min_coeff,max_coeff,term_count");
    out.push_str(if full { ",polynomial\n" } else { "\n" });
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{}",
            r.m1, r.m2, r.min_deg, r.max_deg, r.min_coeff, r.max_coeff, r.term_count
        );
        if let Some(p) = &r.polynomial {
            let _ = write!(out, ",\"{p}\"");
        }
        out.push('\n');
    }
    out
}

/// Computes the output bytes of a job, without touching the cache or sinks.
pub fn render(job: &JobSpec) -> Result<Vec<u8>, CliError> {
    let text = match &job.command {
        Command::Jones { knot, color } => {
            let r = compute_jones(*knot, *color)?.in_variable(job.variable);
            match job.format {
                Format::Json => format!("{}\n", serde_json::to_string(&r.to_json()).expect("serializable")),
                f => render_laurent(&r.value, f),
            }
        }
        Command::Plethysm { color } => {
            let s = psi2_closed(*color);
            match job.format {
                Format::Text => format!("{s}\n"),
                Format::Json => format!("{}\n", serde_json::to_string(&s.to_json()).expect("serializable")),
                Format::Csv => {
                    let mut out = String::from("m1,m2,multiplicity\n");
                    for (w, c) in s.iter() {
                        let _ = writeln!(out, "{},{},{c}", w.m1, w.m2);
                    }
                    out
                }
            }
        }
        Command::Qdim { color } => {
            let d = qdim_closed(*color).map_err(JonesError::from)?;
            let d = if job.variable == Variable::QInverse { d.mirror() } else { d };
            render_laurent(&d, job.format)
        }
        Command::Twist { color, num, den } => {
            let t = twist_monomial(*color, *num, *den).map_err(JonesError::from)?;
            let t = if job.variable == Variable::QInverse { t.mirror() } else { t };
            render_laurent(&t, job.format)
        }
        Command::Degrees { knot, color } => {
            let r = compute_jones(*knot, *color)?.in_variable(job.variable);
            let rep = degree_report(&r)?;
            let list = |v: &[num_rational::Ratio<i64>]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ");
            match job.format {
                Format::Json => format!("{}\n", serde_json::to_string(&rep).expect("serializable")),
                Format::Text => format!(
                    "{rep}\nmin_coeff_at: {}\nmax_coeff_at: {}\nterm_count: {}\n",
                    list(&rep.min_coeff_at),
                    list(&rep.max_coeff_at),
                    rep.term_count
                ),
                Format::Csv => format!(
                    "min_deg,max_deg,min_coeff,max_coeff,leading,trailing,term_count\n{},{},{},{},{},{},{}\n",
                    rep.min_deg, rep.max_deg, rep.min_coeff, rep.max_coeff, rep.leading, rep.trailing, rep.term_count
                ),
            }
        }
        Command::Table { b, max, full, jobs } => {
            let rows = table_rows(*b, *max, job.variable, *full, *jobs)?;
            render_table(&rows, job.format, *full)
        }
        Command::Selfcheck => selfcheck_report().0,
    };
    Ok(text.into_bytes())
}

fn selfcheck_report() -> (String, usize) {
    let outcomes = run_selfcheck();
    let mut out = String::new();
    for o in &outcomes {
        let _ = writeln!(out, "{o}");
    }
    let failed = outcomes.iter().filter(|o| o.passed == Some(false)).count();
    let _ = writeln!(out, "{} checks, {failed} failed", outcomes.iter().filter(|o| o.passed.is_some()).count());
    (out, failed)
}

fn emit(job: &JobSpec, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match &job.output {
        Some(path) => std::fs::write(path, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

/// Runs a job, consulting the cache when configured, and writes to the
/// requested sink.
pub fn run(job: &JobSpec, stdout: &mut dyn Write) -> Result<(), CliError> {
    if job.command == Command::Selfcheck {
        let (text, failed) = selfcheck_report();
        emit(job, text.as_bytes(), stdout)?;
        return if failed > 0 { Err(CliError::SelfcheckFailed(failed)) } else { Ok(()) };
    }
    let cache = job.cache_dir.as_ref().map(Cache::new);
    let key = job.canonical_key();
    let bytes = match cache.as_ref().and_then(|c| c.lookup(&key)) {
        Some(hit) => hit,
        None => {
            let fresh = render(job)?;
            if let Some(c) = &cache {
                if let Err(e) = c.store(&key, &fresh) {
                    log::warn!("could not write cache entry in {}: {e}", c.dir().display());
                }
            }
            fresh
        }
    };
    emit(job, &bytes, stdout)
}

/// Entry point shared by the binary: parse, run, map errors to exit codes.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = JobSpec::from_args(args).and_then(|job| run(&job, &mut io::stdout().lock()));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
