//! Command-line front end: entropy tables, closed-form tables, spectral vs
//! closed-form comparisons, folding-map dumps, correction-function grids and
//! dual entropies, emitted as CSV or JSON.
//!
//! Exit codes: 0 success, 1 domain error, 2 flag parsing, 3 failed
//! comparison.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use ortho_entropy::closedform::{ClosedFormEntropy, ClosedFormError, ExtremalSummary};
use ortho_entropy::entropy::{EntropyError, EntropyTable};
use ortho_entropy::families::{ChebKind, Family, FamilyError};
use ortho_entropy::numthy::{verify_image_structure, ImageStructureReport, TriangleWave};
use ortho_entropy::specfun::{CorrectionFunction, CorrectionMode, SpecfunError};
use ortho_entropy::spectrum::{decompose, SpectrumError};

#[derive(Parser)]
#[command(
    name = "ortho-entropy",
    version,
    about = "Discrete Shannon entropies of orthonormal polynomial sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral entropy table: one row per zero with λ, ℓ and S
    Entropy(EntropyArgs),
    /// Closed-form Chebyshev entropies with their extremal summary
    ClosedForm(ClosedFormArgs),
    /// Cross-check the spectral route against the closed forms (JSON)
    Compare(CompareArgs),
    /// Integer folding-map table and its image-structure report (JSON)
    PhiTable(PhiTableArgs),
    /// Correction function on a grid, both evaluation routes
    Special(SpecialArgs),
    /// Dual (row) entropies of the Ψ matrix
    Dual(DualArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Chebyshev1,
    Chebyshev2,
    Jacobi,
    Pollaczek,
    Meixner,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Polynomial family
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Jacobi α (default 1.2)
    #[arg(long)]
    alpha: Option<f64>,
    /// Jacobi β (default 8.9) / Meixner β (default 3.4)
    #[arg(long)]
    beta: Option<f64>,
    /// Pollaczek θ (default 1.2)
    #[arg(long)]
    theta: Option<f64>,
    /// Pollaczek a (default 8.9)
    #[arg(long)]
    a: Option<f64>,
    /// Meixner c (default 0.2)
    #[arg(long)]
    c: Option<f64>,
}

impl FamilyArgs {
    fn build(&self) -> Result<Family<f64>, CliError> {
        Ok(match self.family {
            FamilyKind::Chebyshev1 => Family::Chebyshev1,
            FamilyKind::Chebyshev2 => Family::Chebyshev2,
            FamilyKind::Jacobi => {
                Family::jacobi(self.alpha.unwrap_or(1.2), self.beta.unwrap_or(8.9))?
            }
            FamilyKind::Pollaczek => {
                Family::pollaczek(self.theta.unwrap_or(1.2), self.a.unwrap_or(8.9))?
            }
            FamilyKind::Meixner => {
                Family::meixner(self.beta.unwrap_or(3.4), self.c.unwrap_or(0.2))?
            }
        })
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// csv or json
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct EntropyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Degrees, comma-separated (e.g. 150,151,152)
    #[arg(long, required = true, value_delimiter = ',')]
    n: Vec<usize>,
    /// Also compute the dual (row) entropy S^i for i = j on each row
    #[arg(long)]
    include_dual: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// Chebyshev kind: 1 or 2
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    kind: u8,
    #[arg(long, required = true, value_delimiter = ',')]
    n: Vec<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, required = true, value_delimiter = ',')]
    n: Vec<usize>,
    /// Maximum allowed |spectral − closed form|
    #[arg(long, default_value_t = 1e-9)]
    threshold: f64,
    /// Output path; stdout when omitted (always JSON)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PhiTableArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    j: u64,
    /// Output path; stdout when omitted (always JSON)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpecialArgs {
    /// Grid as start:stop:step, e.g. 0:0.5:0.01
    #[arg(long)]
    grid: String,
    /// Series truncation tolerance
    #[arg(long, default_value_t = 1e-14)]
    tolerance: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DualArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, required = true, value_delimiter = ',')]
    n: Vec<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

// ---------- output rows ----------

#[derive(Serialize)]
struct EntropyRow {
    n: usize,
    j: usize,
    lambda: f64,
    christoffel: f64,
    entropy: f64,
    method: &'static str,
    /// Present only with --include-dual; the dual entropy S^i at i = j.
    dual_entropy: Option<f64>,
}

#[derive(Serialize)]
struct ClosedFormRow {
    n: usize,
    j: usize,
    d: u64,
    value: f64,
}

#[derive(Serialize)]
struct ExtremalRow {
    n: usize,
    max_value: f64,
    argmax: Vec<usize>,
    min_value: f64,
    argmin: Vec<usize>,
}

#[derive(Serialize)]
struct DualRow {
    n: usize,
    i: usize,
    entropy: f64,
}

#[derive(Serialize)]
struct SpecialRow {
    x: f64,
    digamma_form: f64,
    series_form: f64,
    abs_diff: f64,
}

#[derive(Serialize)]
struct PhiValue {
    k: i64,
    value: u64,
}

#[derive(Serialize)]
struct PhiTableOutput {
    command: &'static str,
    n: u64,
    j: u64,
    /// Values at k = 0..=2n (one double period; the map is even).
    values: Vec<PhiValue>,
    report: ImageStructureReport,
}

#[derive(Serialize)]
struct TableOutput<R: Serialize> {
    command: &'static str,
    family: Family<f64>,
    rows: Vec<R>,
}

#[derive(Serialize)]
struct ClosedFormOutput {
    command: &'static str,
    kind: u8,
    rows: Vec<ClosedFormRow>,
    extremal: Vec<ExtremalRow>,
}

#[derive(Serialize)]
struct SpecialOutput {
    command: &'static str,
    tolerance: f64,
    rows: Vec<SpecialRow>,
}

#[derive(Serialize)]
struct CompareOutput {
    command: &'static str,
    reports: Vec<ortho_entropy::ComparisonReport<f64>>,
    pass: bool,
}

// ---------- emission ----------

fn writer(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_csv<R: Serialize>(rows: &[R], path: &Option<PathBuf>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(writer(path)?);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn emit_json<S: Serialize>(value: &S, path: &Option<PathBuf>) -> Result<(), CliError> {
    let mut w = writer(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

// ---------- commands ----------

fn sorted_degrees(n: &[usize]) -> Result<Vec<usize>, CliError> {
    if n.contains(&0) {
        return Err(CliError::Usage("degrees must be >= 1".into()));
    }
    let mut n = n.to_vec();
    n.sort_unstable();
    n.dedup();
    Ok(n)
}

fn run_entropy(args: &EntropyArgs) -> Result<ExitCode, CliError> {
    let family = args.family.build()?;
    let degrees = sorted_degrees(&args.n)?;
    let per_n: Vec<Vec<EntropyRow>> = degrees
        .par_iter()
        .map(|&n| -> Result<Vec<EntropyRow>, CliError> {
            let started = Instant::now();
            let dec = decompose(&family, n)?;
            let table = EntropyTable::from_decomposition(&family, &dec, args.include_dual);
            let rows = (1..=n)
                .map(|j| EntropyRow {
                    n,
                    j,
                    lambda: dec.zeros()[j - 1],
                    christoffel: dec.christoffel()[j - 1],
                    entropy: table.values[j - 1],
                    method: "spectral",
                    dual_entropy: table.dual_values.as_ref().map(|d| d[j - 1]),
                })
                .collect();
            eprintln!(
                "entropy: {} n={n} done in {:.1?}",
                family.name(),
                started.elapsed()
            );
            Ok(rows)
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<EntropyRow> = per_n.into_iter().flatten().collect();
    match args.out.format {
        Format::Csv => emit_csv(&rows, &args.out.output)?,
        Format::Json => emit_json(
            &TableOutput {
                command: "entropy",
                family,
                rows,
            },
            &args.out.output,
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_closed_form(args: &ClosedFormArgs) -> Result<ExitCode, CliError> {
    let kind = if args.kind == 1 {
        ChebKind::First
    } else {
        ChebKind::Second
    };
    let degrees = sorted_degrees(&args.n)?;
    let cf = ClosedFormEntropy::<f64>::new();
    let mut rows = Vec::new();
    let mut extremal = Vec::new();
    for &n in &degrees {
        for j in 1..=n {
            let r = cf.value(kind, n, j);
            rows.push(ClosedFormRow {
                n,
                j,
                d: r.d,
                value: r.value,
            });
        }
        let ExtremalSummary {
            max_value,
            argmax,
            min_value,
            argmin,
        } = cf.extremal_summary(kind, n);
        extremal.push(ExtremalRow {
            n,
            max_value,
            argmax,
            min_value,
            argmin,
        });
    }
    match args.out.format {
        Format::Csv => {
            emit_csv(&rows, &args.out.output)?;
            for e in &extremal {
                eprintln!(
                    "closed-form: n={} max={} at {:?}, min={} at {:?}",
                    e.n, e.max_value, e.argmax, e.min_value, e.argmin
                );
            }
        }
        Format::Json => emit_json(
            &ClosedFormOutput {
                command: "closed-form",
                kind: args.kind,
                rows,
                extremal,
            },
            &args.out.output,
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_compare(args: &CompareArgs) -> Result<ExitCode, CliError> {
    if args.threshold.is_nan() || args.threshold <= 0.0 {
        return Err(CliError::Usage("threshold must be positive".into()));
    }
    let family = args.family.build()?;
    if family.cheb_kind().is_none() {
        return Err(CliError::Usage(format!(
            "compare requires chebyshev1 or chebyshev2, got {}",
            family.name()
        )));
    }
    let degrees = sorted_degrees(&args.n)?;
    let cf = ClosedFormEntropy::<f64>::new();
    let reports: Vec<_> = degrees
        .par_iter()
        .map(|&n| -> Result<_, CliError> {
            let started = Instant::now();
            let report = cf.compare(&family, n, args.threshold)?;
            eprintln!(
                "compare: {} n={n} max_abs_diff={:e} in {:.1?}",
                family.name(),
                report.max_abs_diff,
                started.elapsed()
            );
            Ok(report)
        })
        .collect::<Result<_, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    emit_json(
        &CompareOutput {
            command: "compare",
            reports,
            pass,
        },
        &args.output,
    )?;
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn run_phi_table(args: &PhiTableArgs) -> Result<ExitCode, CliError> {
    if args.n == 0 || args.j == 0 {
        return Err(CliError::Usage("n and j must be >= 1".into()));
    }
    let wave = TriangleWave::new(args.n, args.j);
    let values = (0..=2 * args.n as i64)
        .map(|k| PhiValue {
            k,
            value: wave.at_integer(k),
        })
        .collect();
    let report = verify_image_structure(args.n, args.j);
    emit_json(
        &PhiTableOutput {
            command: "phi-table",
            n: args.n,
            j: args.j,
            values,
            report,
        },
        &args.output,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || CliError::Usage(format!("grid must be start:stop:step, got {spec:?}"));
    if parts.len() != 3 {
        return Err(usage());
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage())?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step.is_nan() || step <= 0.0 || stop < start {
        return Err(usage());
    }
    let count = ((stop - start) / step).round() as usize + 1;
    if count > 1_000_000 {
        return Err(CliError::Usage("grid has more than 1e6 points".into()));
    }
    Ok((0..count)
        .map(|i| start + i as f64 * step)
        .filter(|&x| x <= stop + step * 1e-9)
        .collect())
}

fn run_special(args: &SpecialArgs) -> Result<ExitCode, CliError> {
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(CliError::Usage("tolerance must be positive".into()));
    }
    let grid = parse_grid(&args.grid)?;
    let corr =
        CorrectionFunction::with_tolerance(CorrectionMode::CrossChecked, args.tolerance);
    let rows: Vec<SpecialRow> = grid
        .iter()
        .map(|&x| -> Result<SpecialRow, CliError> {
            let digamma_form = corr.via_digamma(x)?;
            let series_form = corr.via_series(x)?;
            Ok(SpecialRow {
                x,
                digamma_form,
                series_form,
                abs_diff: (digamma_form - series_form).abs(),
            })
        })
        .collect::<Result<_, _>>()?;
    match args.out.format {
        Format::Csv => emit_csv(&rows, &args.out.output)?,
        Format::Json => emit_json(
            &SpecialOutput {
                command: "special",
                tolerance: args.tolerance,
                rows,
            },
            &args.out.output,
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_dual(args: &DualArgs) -> Result<ExitCode, CliError> {
    let family = args.family.build()?;
    let degrees = sorted_degrees(&args.n)?;
    let per_n: Vec<Vec<DualRow>> = degrees
        .par_iter()
        .map(|&n| -> Result<Vec<DualRow>, CliError> {
            let started = Instant::now();
            let table = EntropyTable::spectral(&family, n, true)?;
            let dual = table.dual_values.expect("requested above");
            eprintln!(
                "dual: {} n={n} done in {:.1?}",
                family.name(),
                started.elapsed()
            );
            Ok(dual
                .iter()
                .enumerate()
                .map(|(idx, &entropy)| DualRow {
                    n,
                    i: idx + 1,
                    entropy,
                })
                .collect())
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<DualRow> = per_n.into_iter().flatten().collect();
    match args.out.format {
        Format::Csv => emit_csv(&rows, &args.out.output)?,
        Format::Json => emit_json(
            &TableOutput {
                command: "dual",
                family,
                rows,
            },
            &args.out.output,
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("ORTHO_ENTROPY_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            if k >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool();
    let result = match &cli.command {
        Command::Entropy(args) => run_entropy(args),
        Command::ClosedForm(args) => run_closed_form(args),
        Command::Compare(args) => run_compare(args),
        Command::PhiTable(args) => run_phi_table(args),
        Command::Special(args) => run_special(args),
        Command::Dual(args) => run_dual(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
