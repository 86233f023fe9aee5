//! Command-line front end: statistics, polynomials, pipe dreams, maximum regularity and the verification suite.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pipedream_reg::Error;

#[derive(Parser, Debug)]
#[command(name = "pipedream-reg", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Override enumeration caps.
    #[arg(long, env = "PIPEDREAM_REG_CAP", global = true)]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// `G_w(x)`
    Groth,
    /// `G_w(x; y)`
    Grothxy,
    /// `S_w(x)`
    Schubert,
    /// `CM_w(x)`
    Cm,
    /// `CM_w(x; y)`
    Cmxy,
    /// The x-factor of `CM_w(x; y)`
    Rajpoly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PipeMode {
    Count,
    List,
    Max,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Statistics of a permutation.
    Stats { perm: String },
    /// A polynomial attached to a permutation.
    Poly {
        perm: String,
        #[arg(long, value_enum)]
        which: Which,
        /// Recompute through pipe dreams and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// Pipe dreams of a permutation.
    Pipedreams {
        perm: String,
        #[arg(value_enum)]
        mode: PipeMode,
    },
    /// Maximum regularity table for n = 1..=N.
    Maxreg {
        n_max: usize,
        /// Also sweep S_n and list the maximizers.
        #[arg(long)]
        enumerate: bool,
    },
    /// Run named checks (all when none given); a trailing number sets n_max.
    Verify {
        args: Vec<String>,
        /// List the available checks.
        #[arg(long)]
        list: bool,
    },
}

/// Exit statuses.
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.passed { 0 } else { EXIT_FAILED })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
