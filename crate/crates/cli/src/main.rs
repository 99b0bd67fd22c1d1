//! `cubepar`: run the parametricity check suites, count free theorems and
//! dump interpretation tables.

mod commands;
mod json;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubepar_core::suites::SuiteConfig;

#[derive(Parser, Debug)]
#[command(name = "cubepar", version, about = "Cubical relational parametricity checks for System F")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a check suite: cube, stability, lambda2, iel, graph, algebra or all.
    Check {
        /// Suite name; `--suite` may be used instead.
        name: Option<String>,
        #[arg(long = "suite", conflicts_with = "name")]
        suite: Option<String>,
        #[command(flatten)]
        opts: Options,
    },
    /// Enumerate the elements of a closed type at level 0.
    Freethm {
        /// The type, e.g. "forall X. X -> X".
        text: Option<String>,
        /// Read the type from a UTF-8 file instead.
        #[arg(long, conflicts_with = "text")]
        file: Option<PathBuf>,
        #[command(flatten)]
        opts: Options,
    },
    /// Dump the interpretation of a closed type or term as JSON.
    Interp {
        text: Option<String>,
        #[arg(long, conflicts_with = "text")]
        file: Option<PathBuf>,
        /// Whether the input is a type or a term.
        #[arg(long, value_enum, default_value_t = Kind::Auto)]
        kind: Kind,
        #[command(flatten)]
        opts: Options,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Auto,
    Type,
    Term,
}

#[derive(Args, Debug, Clone)]
struct Options {
    /// Dimension bound.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    p: u64,
    /// Largest carrier size N.
    #[arg(long, default_value_t = 2)]
    size: u32,
    /// Leave the empty set out of the universe.
    #[arg(long)]
    no_empty: bool,
    /// Largest table, universe or search space that may be built.
    #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for sampled universes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long)]
    json: Option<PathBuf>,
}

impl Options {
    fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            p: self.p as usize,
            size: self.size,
            include_empty: !self.no_empty,
            budget: self.budget as u128,
            seed: self.seed,
        }
    }
}

/// How a command ended, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum Failure {
    /// Some check failed.
    Checks,
    /// Bad arguments, unreadable input, parse or type errors.
    Usage(String),
    /// A configured bound was exceeded.
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { name, suite, opts } => {
            let name = name.or(suite).unwrap_or_else(|| "all".to_string());
            commands::check(&name, &opts)
        }
        Command::Freethm { text, file, opts } => {
            commands::input(text, file).and_then(|t| commands::freethm(&t, &opts))
        }
        Command::Interp { text, file, kind, opts } => {
            commands::input(text, file).and_then(|t| commands::interp(&t, kind, &opts))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Checks => {}
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Budget(m) => eprintln!("budget exceeded: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
