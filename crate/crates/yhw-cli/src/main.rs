//! `yhw`: batch front end for the super-Yangian highest-weight calculus.
//!
//! Jobs come in as JSON on stdin or `--input`; reports go out as JSON on
//! stdout or `--output`. Exit codes: 0 when the run completed (answers live
//! inside the report), 2 for input errors, 3 when a verification family
//! reported failures.

mod job;
mod run;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use job::JobSpec;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input (exit 2).
    Input(String),
    /// The distinguished non-rational-component marker from normalization.
    NonRational(String),
    /// An exactness invariant broke while computing (exit 2, loudly).
    Internal(String),
}

impl CliError {
    fn input(msg: String) -> CliError {
        CliError::Input(msg)
    }

    fn internal(msg: String) -> CliError {
        CliError::Internal(msg)
    }

    fn from_core(e: yhw_core::Error) -> CliError {
        match e {
            yhw_core::Error::NonRationalComponent(msg) => CliError::NonRational(msg),
            yhw_core::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{}", msg),
            CliError::NonRational(msg) => write!(f, "non-rational component: {}", msg),
            CliError::Internal(msg) => write!(f, "internal: {}", msg),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "yhw",
    about = "Highest-weight calculus for the super-Yangian of gl(m|n): odd reflections, finite-dimensionality decisions, and exact matrix-representation checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide finite-dimensionality of the highest-weight module.
    Decide(IoArgs),
    /// Apply one odd reflection at the given index.
    Reflect(IoArgs),
    /// List the reflection chain taking the parity sequence to standard.
    Chain(IoArgs),
    /// Run a seeded verification family against the matrix oracle.
    Verify(IoArgs),
    /// Compute the central series on a module realizing the given weight.
    Berezinian(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Job JSON file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report JSON file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Base seed for verification families.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of seeded instances.
    #[arg(long)]
    count: Option<usize>,
    /// Series truncation order.
    #[arg(long)]
    order: Option<usize>,
    /// Dimension cap for module constructions.
    #[arg(long)]
    max_dim: Option<usize>,
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    command: &'a str,
    job: &'a JobSpec,
    result: T,
    timing_ms: u128,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(dispatch(cli));
}

fn dispatch(cli: Cli) -> i32 {
    let (name, io) = match &cli.command {
        Command::Decide(io) => ("decide", io),
        Command::Reflect(io) => ("reflect", io),
        Command::Chain(io) => ("chain", io),
        Command::Verify(io) => ("verify", io),
        Command::Berezinian(io) => ("berezinian", io),
    };
    match execute(name, io) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("yhw: {}", e);
            2
        }
    }
}

fn execute(name: &str, io: &IoArgs) -> Result<i32, CliError> {
    let raw = read_input(io)?;
    let mut job = JobSpec::parse(&raw)?;
    job.check_command(name)?;
    apply_flag_overrides(&mut job, io);

    let started = Instant::now();
    let (body, exit) = match name {
        "decide" => (
            serde_json::to_value(Report {
                command: name,
                job: &job,
                result: run::run_decide(&job)?,
                timing_ms: started.elapsed().as_millis(),
            }),
            0,
        ),
        "reflect" => (
            serde_json::to_value(Report {
                command: name,
                job: &job,
                result: run::run_reflect(&job)?,
                timing_ms: started.elapsed().as_millis(),
            }),
            0,
        ),
        "chain" => (
            serde_json::to_value(Report {
                command: name,
                job: &job,
                result: run::run_chain(&job)?,
                timing_ms: started.elapsed().as_millis(),
            }),
            0,
        ),
        "verify" => {
            let payload = run::run_verify(&job)?;
            let exit = if payload.failures > 0 { 3 } else { 0 };
            (
                serde_json::to_value(Report {
                    command: name,
                    job: &job,
                    result: payload,
                    timing_ms: started.elapsed().as_millis(),
                }),
                exit,
            )
        }
        "berezinian" => {
            let payload = run::run_berezinian(&job)?;
            let exit = if payload.central && payload.scalar_match {
                0
            } else {
                3
            };
            (
                serde_json::to_value(Report {
                    command: name,
                    job: &job,
                    result: payload,
                    timing_ms: started.elapsed().as_millis(),
                }),
                exit,
            )
        }
        _ => unreachable!(),
    };
    let body = body.map_err(|e| CliError::internal(e.to_string()))?;
    let rendered =
        serde_json::to_string_pretty(&body).map_err(|e| CliError::internal(e.to_string()))?;
    write_output(io, &rendered)?;
    Ok(exit)
}

fn apply_flag_overrides(job: &mut JobSpec, io: &IoArgs) {
    if io.seed.is_some() {
        job.seed = io.seed;
    }
    if io.count.is_some() {
        job.count = io.count;
    }
    if io.order.is_some() {
        job.order = io.order;
    }
    if io.max_dim.is_some() {
        job.max_dim = io.max_dim;
    }
}

fn read_input(io: &IoArgs) -> Result<String, CliError> {
    match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {}", path.display(), e))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::input(format!("cannot read stdin: {}", e)))?;
            Ok(buf)
        }
    }
}

fn write_output(io: &IoArgs, rendered: &str) -> Result<(), CliError> {
    match &io.output {
        Some(path) => std::fs::write(path, format!("{}\n", rendered))
            .map_err(|e| CliError::input(format!("cannot write {}: {}", path.display(), e))),
        None => {
            println!("{}", rendered);
            Ok(())
        }
    }
}
