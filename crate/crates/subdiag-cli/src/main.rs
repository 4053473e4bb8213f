//! Command-line front end: seeded verification suites over block
//! lower-triangular operator algebras, JSON in, JSON report out.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check
//! fails, 2 on invalid input or configuration.

mod matio;
mod report;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::{ConfigEcho, Diagnostic, Report};

/// Environment variable overriding the default tolerance when `--tol` is
/// not given.
const TOL_ENV: &str = "SUBDIAG_TOL";

#[derive(Parser)]
#[command(
    name = "subdiag",
    about = "Numerical checks for block lower-triangular operator algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Block sizes of the ordered partition, e.g. `2,1`.
    #[arg(long, value_delimiter = ',', required = true)]
    partition: Vec<usize>,
    /// Randomized trials for the seeded suites.
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Seed of the frozen ChaCha8 generator family.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerance override (falls back to SUBDIAG_TOL, then to the
    /// per-check defaults).
    #[arg(long)]
    tol: Option<f64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the defining axioms and probe maximality.
    Verify(CommonArgs),
    /// Determinant inequality, formula, and the implication between them.
    Jensen(CommonArgs),
    /// Positive factorization through the algebra.
    Factor {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file with a positive definite matrix to factor; random
        /// instances are generated when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Expected ambient dimension (consistency check on the partition).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// The determinant-constrained minimization, three routes.
    Szego {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file with the state density; a random density is generated
        /// when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Expected ambient dimension (consistency check on the partition).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Commutative picture on the circle: geometric means and the
    /// prediction-error ladder.
    Classical {
        /// Grid size (power of two, at least 8).
        #[arg(long, default_value_t = 4096)]
        grid: usize,
        /// Largest ladder degree.
        #[arg(long, default_value_t = 64)]
        max_degree: usize,
        /// JSON array of positive weight samples, one per grid point; the
        /// canonical single-root weight is used when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let (name, output, outcome) = dispatch(&cli.command);
    match outcome {
        Ok((config, checks)) => {
            let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
            let report = Report::new(name, config, checks, wall_time_ms);
            if let Err(e) = emit(&output, &report.to_json()) {
                eprintln!("subdiag: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            let diagnostic = Diagnostic::new(name, message);
            if emit(&output, &diagnostic.to_json()).is_err() {
                eprintln!("{}", diagnostic.to_json());
            }
            ExitCode::from(2)
        }
    }
}

type Outcome = Result<(ConfigEcho, Vec<report::Check>), String>;

fn dispatch(command: &Command) -> (&'static str, Option<PathBuf>, Outcome) {
    match command {
        Command::Verify(args) => ("verify", args.output.clone(), run_verify(args)),
        Command::Jensen(args) => ("jensen", args.output.clone(), run_jensen(args)),
        Command::Factor { common, input, dim } => (
            "factor",
            common.output.clone(),
            run_factor(common, input.as_deref(), *dim),
        ),
        Command::Szego { common, input, dim } => (
            "szego",
            common.output.clone(),
            run_szego(common, input.as_deref(), *dim),
        ),
        Command::Classical {
            grid,
            max_degree,
            input,
            trials,
            seed,
            tol,
            output,
        } => (
            "classical",
            output.clone(),
            run_classical(*grid, *max_degree, input.as_deref(), *trials, *seed, *tol),
        ),
    }
}

fn effective_tol(flag: Option<f64>) -> Result<Option<f64>, String> {
    let positive = |t: f64| t.is_finite() && t > 0.0;
    if let Some(t) = flag {
        if !positive(t) {
            return Err(format!("tolerance must be positive, found {t}"));
        }
        return Ok(Some(t));
    }
    match std::env::var(TOL_ENV) {
        Ok(raw) => {
            let t: f64 = raw
                .parse()
                .map_err(|_| format!("{TOL_ENV} is not a number: {raw:?}"))?;
            if !positive(t) {
                return Err(format!("{TOL_ENV} must be positive, found {t}"));
            }
            Ok(Some(t))
        }
        Err(_) => Ok(None),
    }
}

fn validate_trials(trials: usize) -> Result<(), String> {
    if trials == 0 {
        return Err("trials must be at least 1".into());
    }
    Ok(())
}

fn check_dim(partition: &[usize], dim: Option<usize>) -> Result<(), String> {
    if let Some(d) = dim {
        let n: usize = partition.iter().sum();
        if d != n {
            return Err(format!("dim {d} does not match the partition sum {n}"));
        }
    }
    Ok(())
}

fn read_input(path: Option<&std::path::Path>) -> Result<Option<String>, String> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map(Some)
            .map_err(|e| format!("cannot read {}: {e}", p.display())),
        None => Ok(None),
    }
}

fn echo(
    args: &CommonArgs,
    tol: Option<f64>,
    input: Option<&std::path::Path>,
    dim: Option<usize>,
) -> ConfigEcho {
    ConfigEcho {
        partition: Some(args.partition.clone()),
        dim,
        trials: Some(args.trials),
        seed: Some(args.seed),
        tol,
        input: input.map(|p| p.display().to_string()),
    }
}

fn run_verify(args: &CommonArgs) -> Outcome {
    validate_trials(args.trials)?;
    let tol = effective_tol(args.tol)?;
    let checks = suites::verify_suite(&args.partition, args.trials, args.seed, tol)?;
    Ok((echo(args, tol, None, None), checks))
}

fn run_jensen(args: &CommonArgs) -> Outcome {
    validate_trials(args.trials)?;
    let tol = effective_tol(args.tol)?;
    let checks = suites::jensen_cmd_suite(&args.partition, args.trials, args.seed, tol)?;
    Ok((echo(args, tol, None, None), checks))
}

fn run_factor(args: &CommonArgs, input: Option<&std::path::Path>, dim: Option<usize>) -> Outcome {
    validate_trials(args.trials)?;
    check_dim(&args.partition, dim)?;
    let tol = effective_tol(args.tol)?;
    let text = read_input(input)?;
    let checks = suites::factor_suite(
        &args.partition,
        text.as_deref(),
        args.trials,
        args.seed,
        tol,
    )?;
    Ok((echo(args, tol, input, dim), checks))
}

fn run_szego(args: &CommonArgs, input: Option<&std::path::Path>, dim: Option<usize>) -> Outcome {
    check_dim(&args.partition, dim)?;
    let tol = effective_tol(args.tol)?;
    let text = read_input(input)?;
    let checks = suites::szego_suite(&args.partition, text.as_deref(), args.seed, tol)?;
    Ok((echo(args, tol, input, dim), checks))
}

fn run_classical(
    grid: usize,
    max_degree: usize,
    input: Option<&std::path::Path>,
    trials: usize,
    seed: u64,
    tol_flag: Option<f64>,
) -> Outcome {
    validate_trials(trials)?;
    let tol = effective_tol(tol_flag)?;
    let text = read_input(input)?;
    let checks = suites::classical_suite(grid, max_degree, text.as_deref(), trials, seed, tol)?;
    Ok((
        ConfigEcho {
            partition: None,
            dim: Some(grid),
            trials: Some(trials),
            seed: Some(seed),
            tol,
            input: input.map(|p| p.display().to_string()),
        },
        checks,
    ))
}

fn emit(output: &Option<PathBuf>, json: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{json}\n")),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}
