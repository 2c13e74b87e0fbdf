mod analyze;
mod construct;
mod output;
mod search;
mod verify;

use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Wiener index vertex-deletion analysis, constructions and search.
#[derive(Parser, Debug)]
#[command(name = "wienerlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-vertex transmission and deletion deltas of one or more graphs
    Analyze(analyze::AnalyzeArgs),
    /// Emit a member of one of the built-in graph families
    Construct(construct::ConstructArgs),
    /// Check family members against their claimed good-vertex statistics
    Verify(verify::VerifyArgs),
    /// Filter a stream of graph6 records
    Search(search::SearchArgs),
}

/// An error together with the process exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DISCONNECTED: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;
pub const EXIT_INTERRUPTED: u8 = 130;

impl Failure {
    pub fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure { code, error: error.into() }
    }
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(error: E) -> Self {
        Failure { code: EXIT_USAGE, error: error.into() }
    }
}

pub type CmdResult = Result<(), Failure>;

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().filter_map(|c| c.downcast_ref::<io::Error>()).any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share status 1 so that 2 keeps meaning "disconnected"
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => analyze::run(args),
        Command::Construct(args) => construct::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Search(args) => search::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if is_broken_pipe(&f.error) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
