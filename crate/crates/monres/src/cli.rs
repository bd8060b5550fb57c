//! Command-line front-end.
//!
//! Exit codes: 0 success, 1 mathematical counterexample, 2 usage or invalid
//! shape, 3 resource budget. Output depends only on the arguments.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monres_core::linalg::{BaseField, PrimeField};
use monres_core::oracle::{OracleConfig, DEFAULT_BUDGET};
use monres_core::pluricirculant::{compare_betti, gens_jt_diagonals, max_index_histogram, nu_counts, betti_jt};
use monres_core::resolution::{CertifyOptions, FreeComplex, SignConvention};
use monres_core::transversal::{betti_table_formula, gens_transversal};
use monres_core::{BettiTable, BlockShape, Error, MonomialIdeal, PluriShape};

use crate::parallel::{betti_oracle_par, scan_comparisons, with_jobs};
use crate::report::{render, Big, BettiReport, Format, IdealReport, NuReport, ScanReport, SuiteReport, ComparisonRow, VerifyReport};
use crate::suites;
use crate::text::{parse_ideal, write_ideal};

#[derive(Debug, Parser)]
#[command(name = "monres", version, about = "Betti numbers and resolutions of transversal and pluri-circulant monomial ideals")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; each command has a plain-text default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// `rationals` or an odd prime.
    #[arg(long, global = true, default_value = "rationals", value_parser = parse_field)]
    pub field: BaseField,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Largest number of strands the oracle may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

fn parse_field(s: &str) -> Result<BaseField, String> {
    match s {
        "rationals" | "q" | "Q" => Ok(BaseField::Rationals),
        _ => {
            let p: u64 = s.parse().map_err(|_| format!("expected `rationals` or a prime, got `{s}`"))?;
            PrimeField::new(p).map(BaseField::Prime).map_err(|e| e.to_string())
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal generators of an ideal.
    #[command(subcommand)]
    Gens(GensTarget),
    /// Betti numbers by closed form, Eliahou–Kervaire, oracle or resolution ranks.
    Betti(BettiArgs),
    /// Run a verification suite; exits 1 on the first counterexample.
    Verify(VerifyArgs),
    /// Generator counts of J_t by largest variable index.
    Nu(NtArgs),
    /// Compare β(J_t) with β(I_t(D)) for two blocks of size n.
    Compare(NtArgs),
    /// Compare every 1 <= t <= n <= n-max; informational, always exits 0.
    Scan(ScanArgs),
    /// Commands on the pluri-circulant ideals J_t.
    #[command(subcommand)]
    Jt(JtCommand),
}

#[derive(Debug, Subcommand)]
pub enum GensTarget {
    /// Transversal ideal I_t(D) of a block-diagonal matrix.
    Transversal(ShapeArgs),
    /// Initial ideal J_t of a truncated pluri-circulant matrix.
    Jt(PluriArgs),
}

#[derive(Debug, Subcommand)]
pub enum JtCommand {
    Gens(PluriArgs),
    Nu(NtArgs),
    Compare(NtArgs),
    Scan(ScanArgs),
}

/// `--blocks 2,2,3 --t 2` or `--n 5 --b 2 --t 3`.
#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    /// Block sizes, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["n", "b"])]
    pub blocks: Option<Vec<u32>>,
    /// Number of blocks (uniform shape) or matrix order for J_t.
    #[arg(long)]
    pub n: Option<u32>,
    /// Block size for `--n`; defaults to 2.
    #[arg(long)]
    pub b: Option<u32>,
    /// Minor size.
    #[arg(long)]
    pub t: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct PluriArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub t: u32,
    #[arg(long, default_value_t = 2)]
    pub b: u32,
}

#[derive(Debug, Clone, Args)]
pub struct NtArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub t: u32,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Ek,
    Oracle,
    Resolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    Transversal,
    Jt,
}

#[derive(Debug, Clone, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Ideal in the text format; only `ek` and `oracle` accept it.
    #[arg(long, conflicts_with_all = ["blocks", "n", "b", "ideal"])]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
    /// Defaults to `jt` for `--method ek` with `--n`, else `transversal`.
    #[arg(long, value_enum)]
    pub ideal: Option<IdealKind>,
    /// Include the multigraded entries (oracle only, JSON only).
    #[arg(long)]
    pub multigraded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// β(J_t) = β(I_t(D)) for t ∈ {n, n−1, n−2}.
    #[value(alias = "thm36")]
    EqualBetti,
    Resolution,
    Identities,
    Stability,
    Radical,
    Generators,
    Oracle,
    Dg,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Upper bound on n (or on m for `resolution` and `oracle`); suite default if absent.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Coordinate range for the identity sweeps.
    #[arg(long, default_value_t = 12)]
    pub range: u64,
    /// Certify this shape only (`resolution`); all t unless `--t` is given.
    #[arg(long, value_delimiter = ',')]
    pub blocks: Option<Vec<u32>>,
    #[arg(long)]
    pub t: Option<u32>,
    /// Random samples for the `dg` suite.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Counterexample(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Counterexample(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            Error::NotStable(_) | Error::Invariant(_) => CliError::Counterexample(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let jobs = cli.global.jobs;
    let result = with_jobs(jobs, || execute(&cli));
    match result {
        Ok(Outcome { stdout, failure }) => {
            let _ = out.write_all(stdout.as_bytes());
            match failure {
                None => 0,
                Some(msg) => {
                    let _ = writeln!(err, "counterexample: {msg}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Rendered output plus the counterexample, if any, that makes the run fail.
struct Outcome {
    stdout: String,
    failure: Option<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, failure: None }
    }
}

fn execute(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Gens(GensTarget::Transversal(s)) => gens(&gens_transversal(&block_shape(s)?), g.format),
        Command::Gens(GensTarget::Jt(p)) | Command::Jt(JtCommand::Gens(p)) => gens(&gens_jt_diagonals(&pluri(p)?), g.format),
        Command::Betti(a) => betti(a, g),
        Command::Verify(a) => verify(a, g),
        Command::Nu(a) | Command::Jt(JtCommand::Nu(a)) => nu(a, g.format),
        Command::Compare(a) | Command::Jt(JtCommand::Compare(a)) => {
            let row = ComparisonRow::from(&compare_betti(a.n, a.t)?);
            Ok(Outcome::ok(render(&row, g.format.unwrap_or(Format::Json))))
        }
        Command::Scan(a) | Command::Jt(JtCommand::Scan(a)) => {
            let rows = scan_comparisons(a.n_max)?.iter().map(ComparisonRow::from).collect();
            Ok(Outcome::ok(render(&ScanReport { n_max: a.n_max, rows }, g.format.unwrap_or(Format::Json))))
        }
    }
}

fn block_shape(s: &ShapeArgs) -> CliResult<BlockShape> {
    let t = s.t.ok_or_else(|| CliError::Usage("--t is required".into()))?;
    Ok(match (&s.blocks, s.n, s.b) {
        (Some(blocks), None, None) => BlockShape::new(blocks.clone(), t)?,
        (None, Some(n), b) => BlockShape::uniform(n, b.unwrap_or(2), t)?,
        _ => return Err(CliError::Usage("give --blocks or --n [--b]".into())),
    })
}

fn pluri(p: &PluriArgs) -> CliResult<PluriShape> {
    Ok(PluriShape::new(p.n, p.b, p.t)?)
}

fn gens(ideal: &MonomialIdeal, format: Option<Format>) -> CliResult<Outcome> {
    Ok(Outcome::ok(match format {
        None => write_ideal(ideal),
        Some(f) => render(&IdealReport::new(ideal), f),
    }))
}

fn oracle_config(g: &GlobalArgs) -> OracleConfig {
    OracleConfig { field: g.field, budget: g.budget }
}

fn betti(a: &BettiArgs, g: &GlobalArgs) -> CliResult<Outcome> {
    let (label, ideal, shape) = if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let ideal = parse_ideal(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        (path.display().to_string(), Some(ideal), None)
    } else {
        let s = &a.shape;
        let kind = a.ideal.unwrap_or(if a.method == Method::Ek && s.blocks.is_none() { IdealKind::Jt } else { IdealKind::Transversal });
        match kind {
            IdealKind::Transversal => {
                let shape = block_shape(s)?;
                (format!("I_{}({:?})", shape.t(), shape.blocks()), None, Some(ShapeSel::Blocks(shape)))
            }
            IdealKind::Jt => {
                if s.blocks.is_some() {
                    return Err(CliError::Usage("J_t takes --n [--b] --t, not --blocks".into()));
                }
                let (Some(n), Some(t)) = (s.n, s.t) else {
                    return Err(CliError::Usage("J_t needs --n and --t".into()));
                };
                let shape = PluriShape::new(n, s.b.unwrap_or(2), t)?;
                (format!("J_{t}(n={n}, b={})", shape.b()), None, Some(ShapeSel::Pluri(shape)))
            }
        }
    };
    let ideal_of = |sel: &ShapeSel| match sel {
        ShapeSel::Blocks(s) => gens_transversal(s),
        ShapeSel::Pluri(s) => gens_jt_diagonals(s),
    };
    let method = format!("{:?}", a.method).to_lowercase();
    let mut multigraded = None;
    let table: BettiTable = match (a.method, &shape) {
        (Method::Formula, Some(ShapeSel::Blocks(s))) => betti_table_formula(s),
        (Method::Formula, Some(ShapeSel::Pluri(s))) => betti_jt(s)?,
        (Method::Formula, None) => return Err(CliError::Usage("--method formula needs a shape, not --file".into())),
        (Method::Resolution, Some(ShapeSel::Blocks(s))) => {
            let complex = FreeComplex::build(s, SignConvention::Graded)?;
            let ranks: Vec<_> = complex.ranks().into_iter().map(|r| (r as u64).into()).collect();
            BettiTable::linear(s.t(), &ranks)
        }
        (Method::Resolution, _) => {
            return Err(CliError::Usage("--method resolution applies to transversal shapes only".into()))
        }
        (Method::Ek, _) => {
            let ideal = ideal.clone().unwrap_or_else(|| ideal_of(shape.as_ref().expect("shape or file")));
            match ideal.stability_witness() {
                Some(w) => {
                    let vars = ideal.vars();
                    let top = w.generator.max_index().expect("nonconstant generator");
                    return Err(CliError::Counterexample(format!(
                        "not stable: {} · {} / {} = {} is not in the ideal",
                        vars.name(w.index),
                        w.generator.display(vars),
                        vars.name(top),
                        w.generator.exchange(top, w.index).display(vars)
                    )));
                }
                None => ideal.betti_ek()?,
            }
        }
        (Method::Oracle, _) => {
            let ideal = ideal.clone().unwrap_or_else(|| ideal_of(shape.as_ref().expect("shape or file")));
            let mb = betti_oracle_par(&ideal, &oracle_config(g))?;
            let table = mb.table();
            if a.multigraded {
                multigraded = Some(mb);
            }
            table
        }
    };
    let mut report = BettiReport::new(label, method, &table);
    if let Some(mb) = &multigraded {
        report = report.with_multigraded(mb);
    }
    Ok(Outcome::ok(match g.format {
        None => report.totals_line() + "\n",
        Some(f) => render(&report, f),
    }))
}

enum ShapeSel {
    Blocks(BlockShape),
    Pluri(PluriShape),
}

fn nu(a: &NtArgs, format: Option<Format>) -> CliResult<Outcome> {
    let shape = PluriShape::new(a.n, 2, a.t)?;
    let ideal = gens_jt_diagonals(&shape);
    let report = NuReport {
        n: a.n,
        t: a.t,
        d: shape.d(),
        nu: nu_counts(&shape)?.into_iter().map(Big).collect(),
        histogram: max_index_histogram(&ideal, shape.meaningful_vars() as usize),
        generators: ideal.gens().len(),
    };
    Ok(Outcome::ok(render(&report, format.unwrap_or(Format::Table))))
}

fn verify(a: &VerifyArgs, g: &GlobalArgs) -> CliResult<Outcome> {
    let config = oracle_config(g);
    let options = CertifyOptions { field: g.field, ..CertifyOptions::default() };
    let suite_list: &[Suite] = match a.suite {
        Suite::All => &[
            Suite::EqualBetti,
            Suite::Identities,
            Suite::Stability,
            Suite::Radical,
            Suite::Generators,
            Suite::Oracle,
            Suite::Resolution,
            Suite::Dg,
        ],
        ref one => std::slice::from_ref(one),
    };
    let mut reports = Vec::new();
    for suite in suite_list {
        let report = match suite {
            Suite::EqualBetti => suites::suite_equal_betti(a.n_max.unwrap_or(8))?,
            Suite::Identities => suites::suite_identities(a.range),
            Suite::Stability => suites::suite_stability(a.n_max.unwrap_or(10))?,
            Suite::Radical => suites::suite_radical(a.n_max.unwrap_or(6))?,
            Suite::Generators => suites::suite_generators(a.n_max.unwrap_or(7), 12)?,
            Suite::Oracle => {
                let mut r = suites::suite_oracle_transversal(a.n_max.unwrap_or(8), &config)?;
                let jt = suites::suite_oracle_jt(a.n_max.unwrap_or(5).min(5), &config)?;
                r.checks.extend(jt.checks);
                SuiteReport::new("oracle", r.checks)
            }
            Suite::Resolution => {
                let shapes = match &a.blocks {
                    Some(blocks) => {
                        let ts: Vec<u32> = match a.t {
                            Some(t) => vec![t],
                            None => (1..=blocks.len() as u32).collect(),
                        };
                        ts.into_iter().map(|t| BlockShape::new(blocks.clone(), t)).collect::<Result<Vec<_>, _>>()?
                    }
                    None => suites::shapes_up_to(a.n_max.unwrap_or(6)),
                };
                suites::suite_resolution(&shapes, &options, g.seed)?.0
            }
            Suite::Dg => suites::suite_dg(4, 2, a.samples, g.seed)?,
            Suite::All => unreachable!("expanded above"),
        };
        reports.push(report);
    }
    let failure = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| format!("{} / {}: {}", r.suite, c.name, c.detail.clone().unwrap_or_default())));
    let report = VerifyReport { passed: failure.is_none(), suites: reports };
    Ok(Outcome { stdout: render(&report, g.format.unwrap_or(Format::Json)), failure })
}
