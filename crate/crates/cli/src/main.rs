//! `hyperramsey` command-line interface.
//!
//! Exit codes: 0 when every check passes, 1 when a property is violated
//! (the witness is printed) or a search is inconclusive, 2 on usage or
//! configuration errors.

mod bound;
mod compute;
mod extract;
mod output;
mod play;
mod search;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use hyperramsey::SearchLimits;

use crate::output::{Format, Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "hyperramsey",
    version,
    about = "Hypergraph Ramsey constructions, games and exact functions"
)]
struct Cli {
    /// Run seed; every random choice derives from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format (default: csv for tables, text otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Node cap for exponential searches.
    #[arg(long, global = true, value_parser = positive_u64)]
    node_cap: Option<u64>,

    /// Wall-clock cap in seconds for exponential searches.
    #[arg(long, global = true, value_parser = positive_f64)]
    time_cap: Option<f64>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate T, g, F1, F2, d and nice numbers.
    Compute(compute::Args),
    /// Run a named certification and report pass or fail.
    Verify(verify::Args),
    /// Play painter against the string-labelling builder.
    Play(play::Args),
    /// Evaluate an upper-bound calculator.
    Bound(bound::Args),
    /// Extract a monochromatic set from a triple coloring.
    Extract(extract::Args),
    /// Search for monochromatic sets, cliques or transitive subtournaments.
    Search(search::Args),
}

fn positive_u64(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Settings shared by every subcommand.
pub struct Ctx {
    pub seed: u64,
    node_cap: Option<u64>,
    time_cap: Option<f64>,
}

impl Ctx {
    /// Fresh limits; the time cap starts counting now.
    pub fn limits(&self) -> SearchLimits {
        let mut l = SearchLimits {
            node_cap: self.node_cap,
            deadline: None,
        };
        if let Some(t) = self.time_cap {
            l = l.with_time_cap(Duration::from_secs_f64(t));
        }
        l
    }
}

/// Failure before any verdict exists.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, bad specs: exit 2.
    Usage(String),
    /// A node or time cap stopped an exponential search: exit 1, no verdict.
    Inconclusive(String),
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<hyperramsey::Error> for CliError {
    fn from(e: hyperramsey::Error) -> Self {
        match e {
            hyperramsey::Error::BudgetExceeded { .. } => CliError::Inconclusive(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Reads a whole input file, naming it in the error.
pub fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        seed: cli.seed,
        node_cap: cli.node_cap,
        time_cap: cli.time_cap,
    };
    let result: Result<Report, CliError> = match cli.command {
        Command::Compute(a) => compute::run(&ctx, a),
        Command::Verify(a) => verify::run(&ctx, a),
        Command::Play(a) => play::run(&ctx, a),
        Command::Bound(a) => bound::run(&ctx, a),
        Command::Extract(a) => extract::run(&ctx, a),
        Command::Search(a) => search::run(&ctx, a),
    };
    let report = match result {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Inconclusive(msg)) => {
            Report::new(serde_json::json!({"status": "inconclusive", "reason": msg}))
                .failing_if(true)
        }
    };
    let text = report.render(cli.format, ctx.seed);
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match report.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
    }
}
