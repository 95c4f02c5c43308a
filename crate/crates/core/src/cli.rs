//! Command-line front end.
//!
//! Exit codes: `0` success, `1` input, parse or infeasibility errors, `2` a
//! solver produced a result that fails its own verification.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::approx::solve_approx;
use crate::error::{Error, Result};
use crate::geometry::{set_tolerance, to_x_axis, tolerance, verify, DEFAULT_TOLERANCE};
use crate::io::{generate, parse_instance, parse_solution, serialize_instance, Family, Mode, SolutionFile};
use crate::line::{candidate_radii, solve_constrained};

#[derive(Debug, Parser)]
#[command(name = "rbcenter", version, about = "Alpha-separated red-blue (p+q)-center clustering")]
struct Cli {
    /// Absolute tolerance for every real comparison.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Uniform,
    Clustered,
    Collinear,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Uniform => Family::Uniform,
            FamilyArg::Clustered => Family::Clustered,
            FamilyArg::Collinear => Family::Collinear,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bi-criteria approximation: radius within 8x optimal, separation at least 3α/4.
    SolveApprox {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact optimum with all centers on the instance's line.
    SolveConstrained {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a solution file against an instance; exit 0 iff it passes.
    Check { instance: PathBuf, solution: PathBuf },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "uniform")]
        family: FamilyArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the sorted candidate radii for the line-constrained problem.
    Candidates { input: PathBuf },
}

enum Failure {
    Input(Error),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit(out: &mut dyn Write, target: Option<&Path>, text: &str) -> Result<()> {
    match target {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[derive(Serialize)]
struct CandidatesOut {
    radii: Vec<f64>,
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::SolveApprox { input, output } => {
            let instance = parse_instance(&read(&input)?)?;
            let sol = solve_approx(&instance);
            let report = verify(&instance, &sol);
            let required = Mode::Approx.required_separation(instance.alpha());
            let file = SolutionFile::new(Mode::Approx, &sol, Some((&report, required)));
            emit(out, output.as_deref(), &to_json(&file))?;
            if !report.passes(required) {
                return Err(Failure::Invariant(format!("approximate solution fails verification: {report:?}")));
            }
        }
        Command::SolveConstrained { input, output } => {
            let instance = parse_instance(&read(&input)?)?;
            let line = instance.line().ok_or(Error::MissingLine)?.clone();
            let sol = solve_constrained(&instance)?.to_solution(&line);
            let report = verify(&instance, &sol);
            let required = Mode::Constrained.required_separation(instance.alpha());
            let file = SolutionFile::new(Mode::Constrained, &sol, Some((&report, required)));
            emit(out, output.as_deref(), &to_json(&file))?;
            if !report.passes(required) {
                return Err(Failure::Invariant(format!("constrained solution fails verification: {report:?}")));
            }
        }
        Command::Check { instance, solution } => {
            let instance = parse_instance(&read(&instance)?)?;
            let file = parse_solution(&read(&solution)?)?;
            let sol = file.to_solution()?;
            if sol.red.len() != instance.p() || sol.blue.len() != instance.q() {
                return Err(Failure::Input(Error::InvalidInput(format!(
                    "solution has {} red and {} blue centers, instance asks for {} and {}",
                    sol.red.len(),
                    sol.blue.len(),
                    instance.p(),
                    instance.q()
                ))));
            }
            let report = verify(&instance, &sol);
            let required = file.mode.required_separation(instance.alpha());
            let mut passes = report.passes(required);
            if file.mode == Mode::Constrained {
                let frame = to_x_axis(&instance)?;
                let on_line = sol.centers().all(|c| {
                    let foot = frame.line().direction().coords().iter()
                        .zip(c.coords())
                        .zip(frame.line().origin().coords())
                        .map(|((u, x), o)| u * (x - o))
                        .sum::<f64>();
                    frame.to_original(foot).dist(c) <= tolerance()
                });
                passes &= on_line;
            }
            let out_file = SolutionFile::new(file.mode, &sol, Some((&report, required)));
            emit(out, None, &to_json(&out_file.report))?;
            if !passes {
                return Err(Failure::Input(Error::InvalidInput("solution does not verify".into())));
            }
        }
        Command::Gen { seed, n, d, p, q, alpha, family, output } => {
            let instance = generate(seed, n, d, p, q, alpha, family.into())?;
            emit(out, output.as_deref(), &serialize_instance(&instance))?;
        }
        Command::Candidates { input } => {
            let instance = parse_instance(&read(&input)?)?;
            let frame = to_x_axis(&instance)?;
            let radii = candidate_radii(frame.instance().points(), instance.alpha());
            emit(out, None, &to_json(&CandidatesOut { radii: radii.values }))?;
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    if let Err(e) = set_tolerance(cli.tolerance) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Invariant(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
