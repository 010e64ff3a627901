//! The `pcm` command line front end.
//!
//! Matrix positions on the command line are 1-based (`--p 1 --q 4` is
//! `a_14`); the library is 0-based. Exit codes: 0 success, 1 conformance
//! self-check failure, 2 usage or validation error, 3 missing Random Index
//! data.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{
    conformance_table, geomspace, linspace, sweep_entry, sweep_power, Axiom, AxiomConfig,
    AxiomError, Counterexamples, SweepCurve,
};
use crate::indices::{
    IndexDescriptor, IndexError, IndexOptions, PriorityMethod, RandomIndexTable, INDEX_NAMES,
};
use crate::io::{format_random_index_table, read_matrix_csv, read_random_index_table};
use crate::matrix::MatrixError;
use crate::sample::{random_consistent, random_pcm, RngSeed};

/// Random Index estimate used by `cr` when no table file is given.
const DEFAULT_RI_SAMPLES: usize = 10_000;
const DEFAULT_RI_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "pcm",
    version,
    about = "Inconsistency indices and axiom checks for pairwise comparison matrices"
)]
struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Violation tolerance for axiom checks; consistency tolerance for `eval`.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate indices on a matrix file.
    Eval(EvalArgs),
    /// Run the axiom checks and print the conformance table.
    Conformance(ConformanceArgs),
    /// Index values along a one-parameter family of matrices, as CSV.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Generate a random matrix.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 9.0)]
        sigma: f64,
    },
    /// Estimate Random Index values by Monte Carlo.
    Ri {
        /// Comma-separated matrix orders.
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5, 6, 7])]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 9.0)]
        sigma: f64,
        #[arg(long, default_value_t = DEFAULT_RI_SAMPLES)]
        samples: usize,
    },
}

#[derive(Args, Debug, Clone)]
struct IndexArgs {
    /// Scale bound `σ`, required by `ni`.
    #[arg(long, value_parser = parse_number)]
    sigma: Option<f64>,
    /// Random Index table for `cr` (`n,RI` lines).
    #[arg(long)]
    ri_table: Option<PathBuf>,
    /// Use principal-eigenvector priorities in `gw`.
    #[arg(long)]
    gw_eigen: bool,
    /// `ε` for `i4`.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    matrix: PathBuf,
    /// Comma-separated index names; defaults to every index that can be
    /// evaluated with the given options.
    #[arg(long, value_delimiter = ',')]
    indices: Vec<String>,
    #[command(flatten)]
    index: IndexArgs,
}

#[derive(Args, Debug)]
struct ConformanceArgs {
    /// Comma-separated index names; defaults to the published seven.
    #[arg(long, value_delimiter = ',')]
    indices: Vec<String>,
    /// Comma-separated axioms, e.g. `a1,a3`; defaults to all five.
    #[arg(long, value_delimiter = ',')]
    axioms: Vec<String>,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 3)]
    min_order: usize,
    #[arg(long, default_value_t = 7)]
    max_order: usize,
    /// Scale of the sampled matrices.
    #[arg(long, default_value_t = 9.0)]
    sample_sigma: f64,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    seed_counterexamples: bool,
    /// Append the full report record of every cell.
    #[arg(long)]
    reports: bool,
    #[command(flatten)]
    index: IndexArgs,
}

#[derive(Args, Debug)]
struct GridArgs {
    /// Explicit ascending values; fractions such as `1/9` are accepted.
    #[arg(long, value_delimiter = ',', value_parser = parse_number)]
    values: Vec<f64>,
    #[arg(long, value_parser = parse_number)]
    from: Option<f64>,
    #[arg(long, value_parser = parse_number)]
    to: Option<f64>,
    #[arg(long, default_value_t = 100)]
    points: usize,
    /// Space the points evenly in logarithm.
    #[arg(long)]
    log: bool,
}

#[derive(Subcommand, Debug)]
enum SweepKind {
    /// Vary one entry `a_pq` (1-based).
    Entry {
        matrix: PathBuf,
        #[arg(long)]
        index: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        options: IndexArgs,
    },
    /// Vary the exponent `b` of `A(b)`.
    Power {
        matrix: PathBuf,
        #[arg(long)]
        index: String,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        options: IndexArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Consistent,
    Random,
}

/// Decimal or `numerator/denominator`.
fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| format!("bad number `{s}`"))?;
            let d: f64 = d.trim().parse().map_err(|_| format!("bad number `{s}`"))?;
            n / d
        }
        None => s.parse().map_err(|_| format!("bad number `{s}`"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{s}` is not a finite number"))
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Matrix(MatrixError),
    Index(IndexError),
    Axiom(AxiomError),
    Io(std::io::Error),
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Matrix(e)
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        CliError::Index(e)
    }
}

impl From<AxiomError> for CliError {
    fn from(e: AxiomError) -> Self {
        match e {
            AxiomError::Matrix(m) => CliError::Matrix(m),
            AxiomError::Index(i) => CliError::Index(i),
            other => CliError::Axiom(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Index(IndexError::MissingRandomIndex(_)) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("UsageError: {m}"),
            CliError::Matrix(e) => format!("{}: {e}", e.name()),
            CliError::Index(e) => format!("{}: {e}", e.name()),
            CliError::Axiom(e) => format!("InvalidConfig: {e}"),
            CliError::Io(e) => format!("Io: {e}"),
        }
    }
}

/// Value rounded to 12 significant digits, printed in shortest form.
fn sig12(v: f64) -> String {
    let rounded: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    rounded.to_string()
}

fn index_options(args: &IndexArgs, order_hint: &[usize]) -> Result<IndexOptions, CliError> {
    let random_index = match &args.ri_table {
        Some(path) => Some(read_random_index_table(path)?),
        None if !order_hint.is_empty() => Some(RandomIndexTable::monte_carlo(
            order_hint,
            9.0,
            DEFAULT_RI_SAMPLES,
            RngSeed(DEFAULT_RI_SEED),
        )?),
        None => None,
    };
    Ok(IndexOptions {
        sigma: args.sigma,
        random_index,
        gw_method: if args.gw_eigen {
            PriorityMethod::Eigenvector
        } else {
            PriorityMethod::GeometricMean
        },
        triad_weights: None,
        epsilon: args.epsilon,
        consistency_tol: None,
    })
}

fn resolve(names: &[String], options: &IndexOptions) -> Result<Vec<IndexDescriptor>, CliError> {
    names
        .iter()
        .map(|n| IndexDescriptor::by_name(n.trim(), options).map_err(CliError::from))
        .collect()
}

fn eval(cli: &Cli, args: &EvalArgs) -> Result<String, CliError> {
    let a = read_matrix_csv(&args.matrix)?;
    let names: Vec<String> = if args.indices.is_empty() {
        INDEX_NAMES
            .iter()
            .filter(|n| **n != "ni" || args.index.sigma.is_some())
            .map(|n| n.to_string())
            .collect()
    } else {
        args.indices.clone()
    };
    let hint: &[usize] = if names.iter().any(|n| n == "cr") {
        &[a.order()]
    } else {
        &[]
    };
    let options = index_options(&args.index, hint)?;
    let indices = resolve(&names, &options)?;
    let mut out = match cli.format {
        Format::Plain => String::new(),
        Format::Csv => String::from("index,value,nu,consistent\n"),
    };
    for index in &indices {
        let v = index.evaluate(&a)?;
        let consistent = (v - index.nu()).abs() <= cli.tol;
        let line = match cli.format {
            Format::Plain => format!(
                "{:<8} {:<20} nu={} consistent={}\n",
                index.name(),
                sig12(v),
                index.nu(),
                if consistent { "yes" } else { "no" }
            ),
            Format::Csv => {
                format!(
                    "{},{},{},{}\n",
                    index.name(),
                    sig12(v),
                    index.nu(),
                    consistent
                )
            }
        };
        out.push_str(&line);
    }
    Ok(out)
}

fn conformance(cli: &Cli, args: &ConformanceArgs) -> Result<(String, bool), CliError> {
    let config = AxiomConfig {
        samples: args.samples,
        min_order: args.min_order,
        max_order: args.max_order,
        sigma: args.sample_sigma,
        seed: RngSeed(cli.seed),
        tol: cli.tol,
        ..Default::default()
    };
    config.validate()?;
    let mut index_args = args.index.clone();
    if index_args.sigma.is_none() {
        index_args.sigma = Some(9.0);
    }
    let indices = if args.indices.is_empty() {
        let mut set = IndexDescriptor::published_set();
        if let Some(s) = args.index.sigma {
            set.retain(|d| d.name() != "ni");
            set.push(IndexDescriptor::by_name(
                "ni",
                &IndexOptions {
                    sigma: Some(s),
                    ..Default::default()
                },
            )?);
        }
        set
    } else {
        let needs_ri = args.indices.iter().any(|n| n == "cr");
        let orders: Vec<usize> = (config.min_order..=config.max_order).collect();
        let options = index_options(&index_args, if needs_ri { &orders } else { &[] })?;
        resolve(&args.indices, &options)?
    };
    let axioms = if args.axioms.is_empty() {
        Axiom::ALL.to_vec()
    } else {
        args.axioms
            .iter()
            .map(|s| Axiom::parse(s).ok_or_else(|| CliError::Usage(format!("unknown axiom `{s}`"))))
            .collect::<Result<_, _>>()?
    };
    let seeds = if args.seed_counterexamples {
        Counterexamples::published()
    } else {
        Counterexamples::none()
    };
    let table = conformance_table(&indices, &axioms, &config, &seeds)?;
    let mut out = match cli.format {
        Format::Plain => table.render_plain(),
        Format::Csv => table.render_csv(),
    };
    if args.reports {
        out.push_str(&table.render_reports());
    }
    Ok((out, table.mismatches().is_empty()))
}

fn grid(args: &GridArgs) -> Result<Vec<f64>, CliError> {
    if !args.values.is_empty() {
        return Ok(args.values.clone());
    }
    let (Some(lo), Some(hi)) = (args.from, args.to) else {
        return Err(CliError::Usage(
            "give either --values or both --from and --to".into(),
        ));
    };
    if args.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    if args.log {
        if !(lo > 0.0 && hi > 0.0) {
            return Err(CliError::Usage("--log needs positive bounds".into()));
        }
        Ok(geomspace(lo, hi, args.points))
    } else {
        Ok(linspace(lo, hi, args.points))
    }
}

fn single_index(name: &str, options: &IndexArgs) -> Result<IndexDescriptor, CliError> {
    let opts = index_options(options, &[])?;
    if name == "cr" && opts.random_index.is_none() {
        let opts = index_options(options, &[3, 4, 5, 6, 7])?;
        return Ok(IndexDescriptor::by_name(name, &opts)?);
    }
    Ok(IndexDescriptor::by_name(name, &opts)?)
}

fn sweep(kind: &SweepKind) -> Result<String, CliError> {
    let curve: SweepCurve = match kind {
        SweepKind::Entry {
            matrix,
            index,
            p,
            q,
            grid: g,
            options,
        } => {
            let a = read_matrix_csv(matrix)?;
            let index = single_index(index, options)?;
            if *p == 0 || *q == 0 {
                return Err(CliError::Usage("--p and --q are 1-based".into()));
            }
            sweep_entry(&index, &a, p - 1, q - 1, &grid(g)?)?
        }
        SweepKind::Power {
            matrix,
            index,
            grid: g,
            options,
        } => {
            let a = read_matrix_csv(matrix)?;
            let index = single_index(index, options)?;
            sweep_power(&index, &a, &grid(g)?)?
        }
    };
    Ok(curve.to_csv())
}

fn dispatch(cli: &Cli) -> Result<(String, bool), CliError> {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Usage(
            "--tol must be finite and non-negative".into(),
        ));
    }
    match &cli.command {
        Command::Eval(args) => Ok((eval(cli, args)?, true)),
        Command::Conformance(args) => conformance(cli, args),
        Command::Sweep { kind } => Ok((sweep(kind)?, true)),
        Command::Gen { kind, n, sigma } => {
            let seed = RngSeed(cli.seed);
            let a = match kind {
                GenKind::Consistent => random_consistent(*n, *sigma, seed)?,
                GenKind::Random => random_pcm(*n, *sigma, seed)?,
            };
            Ok((a.to_string(), true))
        }
        Command::Ri {
            orders,
            sigma,
            samples,
        } => {
            if orders.is_empty() {
                return Err(CliError::Usage("--orders is empty".into()));
            }
            let table = RandomIndexTable::monte_carlo(orders, *sigma, *samples, RngSeed(cli.seed))?;
            Ok((format_random_index_table(&table), true))
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `stdout` or `--out` and diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => fs::write(path, &text)?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(
                stderr,
                "SelfCheckFailed: conformance table disagrees with the published verdicts"
            );
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
