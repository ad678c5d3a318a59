//! Command-line front end for `mixbraid`.

pub mod checks;
pub mod commands;
pub mod parse;

use thiserror::Error;

pub use commands::{run, Cli, Outcome};
pub use parse::{parse_braid, parse_expr, BraidExpr, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Library(#[from] mixbraid::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 for a broken internal invariant, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(mixbraid::Error::WitnessFailure(_)) => 3,
            _ => 2,
        }
    }
}
