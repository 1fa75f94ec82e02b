//! regdet: verification suites and determinant computations for the
//! product formula of higher regularized Fredholm determinants.
//!
//! Exit codes: 0 all checks pass, 1 a verified identity or tolerance
//! failed, 2 usage or I/O error, 3 numerical breakdown (eigensolver
//! non-convergence, log-series outside its disc).

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regdet::formulas::{build_x_m, build_xtilde_m, build_z_bigraded, build_z_m};
use regdet::freealg::NcPoly;
use regdet::matnum::{detm_report, CMatrix, DetmMethod};
use regdet::suite::{run_numeric, run_symbolic, CaseResult, NumericParams};
use report::SuiteReport;

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "regdet",
    version,
    about = "Product-formula verification for regularized Fredholm determinants"
)]
struct Cli {
    /// Bound the worker pool for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact symbolic identities in the free algebra.
    Symbolic {
        #[command(subcommand)]
        action: SymbolicAction,
    },
    /// Seeded numerical trials on dense complex matrices.
    Numeric {
        #[command(subcommand)]
        action: NumericAction,
    },
    /// Print a correction polynomial in the text grammar.
    Show(ShowArgs),
    /// Compute det_m(I + A) for a matrix read from JSON.
    Detm(DetmArgs),
}

#[derive(Subcommand)]
enum SymbolicAction {
    /// Check every identity up to the cutoff order, in exact arithmetic.
    Verify {
        /// Largest regularization order to check.
        #[arg(long = "max-m", default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_m: u32,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum NumericAction {
    /// Run the seeded product-formula sweep.
    Verify {
        /// Matrix dimension for the sweep.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        dim: u32,
        /// Largest regularization order per trial.
        #[arg(long = "max-m", default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_m: u32,
        /// Number of independent (A, B) draws.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Base seed; trial t uses seeds base+2t and base+2t+1.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Operator norm of each drawn matrix.
        #[arg(long, default_value_t = 0.4)]
        norm: f64,
        /// Pass threshold for every measured residual.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ShowArgs {
    /// Which polynomial family to print.
    #[arg(value_enum)]
    what: ShowWhat,
    /// Regularization order (ignored for zk, which is indexed by grade).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=12))]
    m: u32,
    /// Bigraded block (k1,k2): restricts xm/xtilde/zm, selects for zk.
    #[arg(long, value_parser = parse_grade)]
    grade: Option<(u32, u32)>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowWhat {
    /// Correction polynomial of the product formula.
    Xm,
    /// Trace-class-case correction.
    Xtilde,
    /// Their difference, a sum of commutators.
    Zm,
    /// One bigraded block of the difference (requires --grade).
    Zk,
}

#[derive(Args)]
struct DetmArgs {
    /// Path to a matrix in the JSON grammar {"dim": n, "data": [[re, im], ...]}.
    #[arg(long)]
    input: PathBuf,
    /// Regularization order.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Which routes to evaluate.
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Lu,
    Eig,
    Series,
    All,
}

impl From<Method> for DetmMethod {
    fn from(m: Method) -> DetmMethod {
        match m {
            Method::Lu => DetmMethod::Lu,
            Method::Eig => DetmMethod::Eig,
            Method::Series => DetmMethod::Series,
            Method::All => DetmMethod::All,
        }
    }
}

fn parse_grade(s: &str) -> Result<(u32, u32), String> {
    let (k1, k2) = s
        .split_once(',')
        .ok_or_else(|| format!("expected k1,k2 but got '{s}'"))?;
    let k1 = k1.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let k2 = k2.trim().parse::<u32>().map_err(|e| e.to_string())?;
    Ok((k1, k2))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match cli.command {
        Command::Symbolic {
            action: SymbolicAction::Verify { max_m, json },
        } => {
            let start = Instant::now();
            let cases = run_symbolic(max_m, true);
            emit_suite("symbolic", cases, start, json.as_deref())
        }
        Command::Numeric {
            action:
                NumericAction::Verify {
                    dim,
                    max_m,
                    trials,
                    seed,
                    norm,
                    tol,
                    json,
                },
        } => {
            if !norm.is_finite() || norm <= 0.0 || !tol.is_finite() || tol <= 0.0 {
                eprintln!("error: --norm and --tol must be positive");
                return ExitCode::from(EXIT_USAGE);
            }
            let params = NumericParams {
                dim: dim as usize,
                max_m,
                trials,
                seed,
                norm,
                tol,
            };
            let start = Instant::now();
            let cases = run_numeric(&params, true);
            emit_suite("numeric", cases, start, json.as_deref())
        }
        Command::Show(args) => run_show(&args),
        Command::Detm(args) => run_detm(&args),
    }
}

fn configure_threads(threads: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        // Ignore the error if a pool already exists; tests may re-enter.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

fn emit_suite(
    name: &str,
    cases: Vec<CaseResult>,
    start: Instant,
    json: Option<&std::path::Path>,
) -> ExitCode {
    let broke_down = cases.iter().any(|c| c.error.is_some());
    let report = SuiteReport::new(name, cases, start.elapsed().as_secs_f64());
    match json {
        Some(path) => {
            if let Err(e) = report.write_json(path) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
            eprintln!(
                "{name}: {} cases, pass={} ({:.2}s), report at {}",
                report.cases.len(),
                report.pass,
                report.elapsed,
                path.display()
            );
        }
        None => println!("{}", report.to_json()),
    }
    if broke_down {
        ExitCode::from(EXIT_NUMERICAL)
    } else if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    }
}

fn run_show(args: &ShowArgs) -> ExitCode {
    let poly = match args.what {
        ShowWhat::Xm => build_x_m(args.m),
        ShowWhat::Xtilde => build_xtilde_m(args.m),
        ShowWhat::Zm => match build_z_m(args.m) {
            Ok(z) => z,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_VERIFY_FAIL);
            }
        },
        ShowWhat::Zk => {
            let Some((k1, k2)) = args.grade else {
                eprintln!("error: zk needs --grade k1,k2");
                return ExitCode::from(EXIT_USAGE);
            };
            println!("{}", build_z_bigraded(k1, k2));
            return ExitCode::SUCCESS;
        }
    };
    let shown: NcPoly = match args.grade {
        Some((k1, k2)) => poly.bigraded_component(k1 as usize, k2 as usize),
        None => poly,
    };
    println!("{shown}");
    ExitCode::SUCCESS
}

fn run_detm(args: &DetmArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let matrix = match CMatrix::parse_json(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match detm_report(&matrix, args.m, args.method.into()) {
        Ok(report) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}
