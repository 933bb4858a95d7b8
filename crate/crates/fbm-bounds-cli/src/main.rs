//! Command-line front end for the bounds library.
//!
//! Subcommands:
//!
//! * `bounds`   — every applicable lower/upper bound over an index grid.
//! * `mu`       — the discrete-supremum first-moment bounds (H ≤ 1/2).
//! * `omega`    — the envelope-constant breakdown (H ≤ 1/2).
//! * `figure`   — the data behind the standard comparison plots.
//! * `validate` — simulation cross-checks of the analytic results.
//!
//! Output is CSV (default) or JSON, written to stdout or `--out`. Exit
//! codes: 0 success, 1 validation/compute failure, 2 I/O error, 64 usage
//! error. Configuration is explicit via flags; no environment variables are
//! consulted.

mod checks;
mod table;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fbm_bounds::bounds::{combined_bounds, mu_bounds, omega, Hurst, OmegaBranch};

use checks::CheckParams;
use table::{Cell, Table};

/// The analytic formulas degenerate at the interval endpoints, so evaluation
/// points are clamped to [`MIN_H`, `MAX_H`] with a warning.
const MIN_H: f64 = 1e-6;
const MAX_H: f64 = 1.0 - 1e-6;

/// Refuse absurdly fine grids instead of looping for hours.
const MAX_GRID_POINTS: usize = 1_000_000;

const EXIT_FAILURE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "fbm-bounds",
    version,
    about = "Bounds and simulation checks for the expected supremum of \
             drifted fractional Brownian motion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every applicable bound on an index point or grid.
    Bounds(GridArgs),
    /// Evaluate the unit-interval supremum moment bounds (H <= 1/2).
    Mu(GridArgs),
    /// Evaluate the envelope-constant breakdown (H <= 1/2).
    Omega(GridArgs),
    /// Emit the data behind one of the standard figures.
    Figure(FigureArgs),
    /// Cross-check the analytic results against simulation.
    Validate(ValidateArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("points").required(true).args(["h", "h_grid"]))]
struct GridArgs {
    /// Single index value in (0, 1).
    #[arg(long, value_name = "H", value_parser = parse_index)]
    h: Option<f64>,

    /// Inclusive index grid START:STOP:STEP with STEP > 0.
    #[arg(long, value_name = "START:STOP:STEP", value_parser = parse_grid)]
    h_grid: Option<GridSpec>,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Which figure's data to emit.
    #[arg(long, value_enum)]
    which: Figure,

    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args)]
#[command(group = ArgGroup::new("points").required(true).args(["h", "h_grid"]))]
struct ValidateArgs {
    /// Single index value in (0, 1).
    #[arg(long, value_name = "H", value_parser = parse_index)]
    h: Option<f64>,

    /// Inclusive index grid START:STOP:STEP with STEP > 0.
    #[arg(long, value_name = "START:STOP:STEP", value_parser = parse_grid)]
    h_grid: Option<GridSpec>,

    /// Negative drift rate of the simulated process.
    #[arg(long, default_value_t = 1.0)]
    drift: f64,

    /// Independent sample paths per estimate.
    #[arg(long, default_value_t = 2000)]
    paths: u64,

    /// Grid points per path (power of two, at least 8).
    #[arg(long, default_value_t = 32768)]
    steps: usize,

    /// Base seed; every estimator derives its streams from it.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Figure {
    /// All bounds over the full index range.
    AllBounds,
    /// The competing first-moment upper bounds on (0, 1/2].
    MuCompare,
    /// The upper/lower bound ratio on (0, 1/2].
    Ratio,
}

#[derive(Clone, Copy, Debug)]
struct GridSpec {
    start: f64,
    stop: f64,
    step: f64,
}

fn parse_index(text: &str) -> Result<f64, String> {
    let v: f64 = text
        .parse()
        .map_err(|_| format!("`{text}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("index must be finite".to_string())
    }
}

fn parse_grid(text: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("expected START:STOP:STEP, got `{text}`"));
    };
    let number = |name: &str, s: &str| -> Result<f64, String> {
        s.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("{name} `{s}` is not a finite number"))
    };
    let spec = GridSpec {
        start: number("start", start)?,
        stop: number("stop", stop)?,
        step: number("step", step)?,
    };
    if spec.step <= 0.0 {
        return Err(format!("step must be positive, got {}", spec.step));
    }
    if spec.stop < spec.start {
        return Err(format!(
            "stop {} lies before start {}",
            spec.stop, spec.start
        ));
    }
    if grid_len(spec) > MAX_GRID_POINTS {
        return Err(format!("grid has more than {MAX_GRID_POINTS} points"));
    }
    Ok(spec)
}

fn grid_len(spec: GridSpec) -> usize {
    // The small tolerance keeps STOP itself on the grid when
    // (STOP − START)/STEP is an integer up to rounding.
    let count = ((spec.stop - spec.start) / spec.step + 1e-9).floor();
    count as usize + 1
}

/// Expands the point/grid arguments into concrete evaluation points, clamped
/// to the open interval the formulas are defined on.
fn evaluation_points(h: Option<f64>, h_grid: Option<GridSpec>) -> (Vec<f64>, Vec<String>) {
    let raw: Vec<f64> = match (h, h_grid) {
        (Some(single), None) => vec![single],
        (None, Some(grid)) => (0..grid_len(grid))
            .map(|k| grid.start + k as f64 * grid.step)
            .collect(),
        _ => unreachable!("clap enforces exactly one of --h/--h-grid"),
    };
    let mut warnings = Vec::new();
    let points = raw
        .into_iter()
        .map(|v| {
            let clamped = v.clamp(MIN_H, MAX_H);
            if clamped != v {
                warnings.push(format!("warning: index {v} clamped to {clamped}"));
            }
            clamped
        })
        .collect();
    (points, warnings)
}

enum CliError {
    Usage(String),
    Failure(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Io(m) => m,
        }
    }

    fn compute(err: impl std::fmt::Display) -> Self {
        CliError::Failure(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bounds(args) => {
            let (points, warnings) = evaluation_points(args.h, args.h_grid);
            let table = bounds_table(&points, warnings)?;
            emit(&table, &args.output)
        }
        Command::Mu(args) => {
            let (points, warnings) = evaluation_points(args.h, args.h_grid);
            require_subdiffusive("mu", &points)?;
            let table = mu_table(&points, warnings, true)?;
            emit(&table, &args.output)
        }
        Command::Omega(args) => {
            let (points, warnings) = evaluation_points(args.h, args.h_grid);
            require_subdiffusive("omega", &points)?;
            let table = omega_table(&points, warnings)?;
            emit(&table, &args.output)
        }
        Command::Figure(args) => {
            let (points, warnings) = evaluation_points(args.grid.h, args.grid.h_grid);
            let table = match args.which {
                Figure::AllBounds => bounds_table(&points, warnings)?,
                Figure::MuCompare => {
                    require_subdiffusive("figure mu-compare", &points)?;
                    mu_table(&points, warnings, false)?
                }
                Figure::Ratio => {
                    require_subdiffusive("figure ratio", &points)?;
                    ratio_table(&points, warnings)?
                }
            };
            emit(&table, &args.grid.output)
        }
        Command::Validate(args) => {
            let (points, warnings) = evaluation_points(args.h, args.h_grid);
            let params = validate_params(&args)?;
            let (table, all_pass) = checks::run_all(&points, params, warnings);
            emit(&table, &args.output)?;
            if all_pass {
                Ok(())
            } else {
                Err(CliError::Failure(
                    "one or more validation checks failed".to_string(),
                ))
            }
        }
    }
}

fn require_subdiffusive(what: &str, points: &[f64]) -> Result<(), CliError> {
    match points.iter().find(|&&v| v > 0.5) {
        Some(v) => Err(CliError::Usage(format!(
            "{what} is defined for H <= 1/2 only; got H = {v}"
        ))),
        None => Ok(()),
    }
}

fn validate_params(args: &ValidateArgs) -> Result<CheckParams, CliError> {
    if !(args.drift > 0.0 && args.drift.is_finite()) {
        return Err(CliError::Usage(format!(
            "--drift must be positive and finite, got {}",
            args.drift
        )));
    }
    if args.paths < 16 {
        return Err(CliError::Usage(format!(
            "--paths must be at least 16, got {}",
            args.paths
        )));
    }
    if args.steps < 8 || !args.steps.is_power_of_two() {
        return Err(CliError::Usage(format!(
            "--steps must be a power of two at least 8, got {}",
            args.steps
        )));
    }
    Ok(CheckParams {
        drift: args.drift,
        paths: args.paths,
        steps: args.steps,
        seed: args.seed,
    })
}

fn bounds_table(points: &[f64], warnings: Vec<String>) -> Result<Table, CliError> {
    let mut table = Table::new(vec![
        "H",
        "L1",
        "L2",
        "L3",
        "L",
        "U1",
        "U2",
        "U2_sudakov",
        "U2_circ",
        "U",
        "ratio",
    ]);
    table.meta = warnings;
    for &hv in points {
        let h = Hurst::new(hv).map_err(CliError::compute)?;
        // Near H = 1 the bound values genuinely exceed the f64 range; report
        // such points as rows of missing values rather than aborting, so a
        // grid that touches the clamped endpoint still produces a table.
        match combined_bounds(h) {
            Ok(b) => table.push_row(vec![
                Cell::num(hv),
                Cell::num(b.l1),
                Cell::opt(b.l2),
                Cell::opt(b.l3),
                Cell::num(b.lower_combined),
                Cell::opt(b.u1),
                Cell::opt(b.u2),
                Cell::opt(b.u2_sudakov),
                Cell::opt(b.u2_circ),
                Cell::num(b.upper_combined),
                Cell::num(b.ratio),
            ]),
            Err(err) => {
                table
                    .meta
                    .push(format!("warning: H={hv}: values not representable: {err}"));
                let mut row = vec![Cell::num(hv)];
                row.resize(table.columns.len(), Cell::Num(None));
                table.push_row(row);
            }
        }
    }
    Ok(table)
}

fn mu_table(points: &[f64], warnings: Vec<String>, with_lower: bool) -> Result<Table, CliError> {
    let columns = if with_lower {
        vec!["H", "lower", "borovkov", "sudakov", "combined"]
    } else {
        vec!["H", "borovkov", "sudakov", "combined"]
    };
    let mut table = Table::new(columns);
    table.meta = warnings;
    for &hv in points {
        let h = Hurst::new(hv).map_err(CliError::compute)?;
        let m = mu_bounds(h, 1.0).map_err(CliError::compute)?;
        let mut row = vec![Cell::num(hv)];
        if with_lower {
            row.push(Cell::num(m.lower));
        }
        row.push(Cell::num(m.upper_borovkov));
        row.push(Cell::opt(m.upper_sudakov));
        row.push(Cell::num(m.upper_combined));
        table.push_row(row);
    }
    Ok(table)
}

fn omega_table(points: &[f64], warnings: Vec<String>) -> Result<Table, CliError> {
    let mut table = Table::new(vec![
        "H", "omega", "branch", "omega0", "omega1", "omega2", "tau_circ",
    ]);
    table.meta = warnings;
    for &hv in points {
        let h = Hurst::new(hv).map_err(CliError::compute)?;
        let w = omega(h).map_err(CliError::compute)?;
        let branch = match w.branch {
            OmegaBranch::Omega0 => "omega0",
            OmegaBranch::Omega1 => "omega1",
        };
        table.push_row(vec![
            Cell::num(hv),
            Cell::num(w.omega),
            Cell::text(branch),
            Cell::opt(w.omega0),
            Cell::num(w.omega1),
            Cell::num(w.omega2),
            Cell::opt(w.tau_circ),
        ]);
    }
    Ok(table)
}

fn ratio_table(points: &[f64], warnings: Vec<String>) -> Result<Table, CliError> {
    let mut table = Table::new(vec!["H", "ratio"]);
    table.meta = warnings;
    for &hv in points {
        let h = Hurst::new(hv).map_err(CliError::compute)?;
        let b = combined_bounds(h).map_err(CliError::compute)?;
        table.push_row(vec![Cell::num(hv), Cell::num(b.ratio)]);
    }
    Ok(table)
}

fn emit(table: &Table, output: &OutputArgs) -> Result<(), CliError> {
    for line in &table.meta {
        eprintln!("{line}");
    }
    let text = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match &output.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
    }
}
