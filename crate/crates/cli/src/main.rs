//! `sakaguchi`: expand class members, certify the proof objectives, and run
//! sampling campaigns against the sharp bounds.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use sakaguchi::certify::{certify_all, DEFAULT_GRID, DEFAULT_REFINE_ITERS, MIN_GRID};
use sakaguchi::expand::{expand, feasibility};
use sakaguchi::harness::{
    bounded_functionals, check_extremals, claimed_bound, explore_true_h23, run_campaign, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
use sakaguchi::report::{render_reports, render_stats, OutputFormat, ReportSet, StatsSet};
use sakaguchi::wspec::WSpec;
use sakaguchi::{ClassId, FunctionalId, ScalarMode};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const THREADS_VAR: &str = "SAKAGUCHI_THREADS";

#[derive(Parser, Debug)]
#[command(name = "sakaguchi", version, about = "Sharp coefficient bounds for Sakaguchi-type starlike classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a2..a5, inverse and logarithmic coefficients, and every functional.
    Expand(ExpandArgs),
    /// Reproduce every proof extremum and check exact attainment by the extremal functions.
    Certify(CertifyArgs),
    /// Sample class members and tabulate each functional against its bound.
    Sample(SampleArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// json, csv or markdown.
    #[arg(long, default_value = "json", value_parser = OutputFormat::from_str)]
    output: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long = "out", value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long, value_parser = ClassId::from_str)]
    class: ClassId,
    /// `z`, `z2`, or coefficients `c1,c2,c3,c4` (rational, decimal or `a+bi`).
    #[arg(long, value_parser = WSpec::from_str, allow_hyphen_values = true)]
    w: WSpec,
    /// exact or float.
    #[arg(long, default_value = "exact", value_parser = ScalarMode::from_str)]
    mode: ScalarMode,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// Grid nodes per axis (at least 64).
    #[arg(long, default_value_t = DEFAULT_GRID, value_parser = parse_grid)]
    grid: usize,
    /// Golden-section iterations per coordinate sweep.
    #[arg(long, default_value_t = DEFAULT_REFINE_ITERS)]
    refine_iters: usize,
    /// Largest accepted |computed - claimed| for the proof objectives.
    #[arg(long, default_value_t = 1e-6, value_parser = parse_tol)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long, value_parser = ClassId::from_str)]
    class: ClassId,
    /// A functional identifier, or `all` for every bounded functional of the class.
    #[arg(long, default_value = "all")]
    functional: String,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = parse_trials)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also sample the true A3 A5 - A4^2 against the bound stated for H_{2,3}(f^-1).
    #[arg(long)]
    explore_true_h23: bool,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_grid(s: &str) -> Result<usize, String> {
    let g: usize = s.parse().map_err(|e| format!("{e}"))?;
    if g < MIN_GRID {
        return Err(format!("grid must be at least {MIN_GRID}"));
    }
    Ok(g)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(t > 0.0 && t.is_finite()) {
        return Err("tolerance must be positive".into());
    }
    Ok(t)
}

fn parse_trials(s: &str) -> Result<u64, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if n == 0 {
        return Err("trials must be at least 1".into());
    }
    Ok(n)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn emit(text: &str, out: &OutputArgs) -> Result<(), String> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_expand(args: ExpandArgs) -> ExitCode {
    let verdict = feasibility(&args.w);
    for v in &verdict.violations {
        eprintln!(
            "warning: w = {} is not a Schwarz function: {:?} fails ({:.6} > {:.6})",
            args.w, v.inequality, v.lhs, v.rhs
        );
    }
    let e = expand(args.class, &args.w, args.mode);
    match emit(&e.render(args.output.output), &args.output) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => usage(msg),
    }
}

fn cmd_certify(args: CertifyArgs) -> ExitCode {
    let mut reports = match certify_all(args.grid, args.refine_iters, args.tol) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    reports.extend(check_extremals());
    let set = ReportSet::new(reports);
    if let Err(msg) = emit(&render_reports(&set, args.output.output), &args.output) {
        return usage(msg);
    }
    if set.all_pass() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{} of {} checks failed", set.summary.fail, set.reports.len());
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_sample(args: SampleArgs) -> ExitCode {
    let functionals = if args.functional == "all" {
        bounded_functionals(args.class)
    } else {
        match FunctionalId::from_str(&args.functional) {
            Ok(f) if claimed_bound(args.class, f).is_some() => vec![f],
            _ => {
                let known: Vec<String> = bounded_functionals(args.class).iter().map(|f| f.to_string()).collect();
                return usage(format!(
                    "unknown functional `{}` for {}; expected `all` or one of {}",
                    args.functional,
                    args.class,
                    known.join(", ")
                ));
            }
        }
    };
    let stats = match run_campaign(args.class, &functionals, args.trials, args.seed) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let mut explorations = Vec::new();
    if args.explore_true_h23 {
        match explore_true_h23(args.class, args.trials, args.seed) {
            Ok(e) => explorations.push(e),
            Err(e) => return usage(e),
        }
    }
    let set = StatsSet { stats, explorations };
    if let Err(msg) = emit(&render_stats(&set, args.output.output), &args.output) {
        return usage(msg);
    }
    let violations = set.total_violations();
    if violations == 0 {
        ExitCode::SUCCESS
    } else {
        eprintln!("{violations} bound violations");
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = configure_threads() {
        return usage(msg);
    }
    match cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Sample(args) => cmd_sample(args),
    }
}
