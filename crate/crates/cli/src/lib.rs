//! Command-line front end for `seqlab`.

pub mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Budgets, Command, RunConfig};
pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] seqlab::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use seqlab::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
            CliError::Io(_) => EXIT_FAILURE,
            CliError::Core(e) => match e {
                E::ResourceLimit { .. } => EXIT_BUDGET,
                E::Inconclusive { .. } => EXIT_INCONCLUSIVE,
                E::Domain(_) | E::UnknownLattice(_) | E::MissingFixture(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            },
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

/// Runs a parsed configuration, streaming results to `out`.
pub fn run<W: Write>(config: &RunConfig, out: &mut W) -> CliResult {
    commands::dispatch(config, out)
}

/// Parses `args`, runs, reports diagnostics on stderr and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&config, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = out.flush();
            let code = e.exit_code();
            if code != EXIT_OK {
                eprintln!("seqlab: {e}");
            }
            code
        }
    }
}
