//! `sympspin`: apply operators to polynomial spinors, compute graded kernels,
//! and run the verification suites.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sympspin_core::analysis::Suite;

use config::{parse_rank, parse_suites, Format, ParityArg};

#[derive(Debug, Parser)]
#[command(name = "sympspin", version, about = "Exact computations with polynomial symplectic spinors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply an operator word such as `Ds Xs` or `Ts` to a spinor.
    Apply(ApplyArgs),
    /// Print the dimension and canonical basis of an operator kernel on a sector.
    Kernel(KernelArgs),
    /// Run verification suites and write reports.
    Verify(VerifyArgs),
    /// Aggregate saved triangle reports into dimension tables.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
struct ApplyArgs {
    #[arg(long, value_parser = parse_rank)]
    n: usize,
    #[arg(long)]
    op: String,
    /// File holding the spinor, or `-` for stdin.
    #[arg(long, required_unless_present = "expr", conflicts_with = "expr")]
    input: Option<String>,
    /// The spinor given inline.
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct KernelArgs {
    #[arg(long, value_parser = parse_rank)]
    n: usize,
    #[arg(long, default_value = "Ds")]
    op: String,
    #[arg(long = "h", visible_alias = "hmax")]
    h: u32,
    #[arg(long = "Q")]
    q: u32,
    #[arg(long, value_enum, default_value = "both")]
    parity: ParityArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Clone)]
struct SuiteList(Vec<Suite>);

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_rank)]
    n: usize,
    #[arg(long = "hmax", visible_alias = "h")]
    h_max: u32,
    #[arg(long = "Q")]
    q: u32,
    #[arg(long, value_enum, default_value = "both")]
    parity: ParityArg,
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all", value_parser = |s: &str| parse_suites(s).map(SuiteList))]
    suites: SuiteList,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Directory receiving one JSON report file per suite.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Report files or directories of `*.json` reports.
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Bad user input (exit 2) as opposed to a failed computation (exit 1).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn configure_threads() {
    let Ok(v) = std::env::var("SYMPSPIN_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(k) if k > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
        _ => eprintln!("warning: ignoring SYMPSPIN_THREADS={v:?}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Apply(a) => commands::apply(a.n, &a.op, a.input.as_deref(), a.expr.as_deref(), a.format),
        Command::Kernel(a) => commands::kernel(a.n, &a.op, a.h, a.q, a.parity.into(), a.format),
        Command::Verify(a) => commands::verify(config::JobConfig {
            n: a.n,
            h_max: a.h_max,
            q_bound: a.q,
            parity: a.parity.into(),
            suites: a.suites.0,
            output_path: a.out,
            format: a.format,
        }),
        Command::Report(a) => commands::report(&a.input, a.format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
