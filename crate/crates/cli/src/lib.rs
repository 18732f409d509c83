//! Reproducible command-line runs over the `superq` library.

pub mod commands;
pub mod config;
pub mod output;
pub mod spec;

pub use commands::{run, Command, Outcome, Status};
pub use config::{Format, RunConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

macro_rules! math_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Math(e.to_string())
            }
        })*
    };
}

math_error!(
    superq::uqrep::RepError,
    superq::rmatrix::RmatrixError,
    superq::coord::CoordError,
    superq::homogeneous::HomError
);
