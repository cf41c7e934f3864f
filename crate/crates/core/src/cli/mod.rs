//! Command-line front end: `verify`, `conjecture`, `witness` and `report`.
//!
//! Reports go to stdout (or `-o`), progress to stderr. Exit codes: 0 all
//! checks passed, 1 a mathematical check failed, 2 usage or input error,
//! 3 a resource bound was hit.

mod args;
mod run;
mod tasks;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Command, Format, IdentityKind, WitnessKind};
pub use run::{RunReport, Status, TaskOutcome};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Exit code for an error that aborts a whole command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceBound(_) => EXIT_RESOURCE,
        Error::CertificateInvalid(_) | Error::Internal(_) | Error::NotDivisible { .. } => EXIT_MATH,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    run::execute(&cli)
}
