//! Command-line support for `motzkin-core`: table, series and automaton
//! file formats, sequence anchors with optional OEIS download, and the
//! cross-engine check runner.

pub mod check;
pub mod format;
pub mod oeis;

use motzkin_core::{OracleError, PathError, SeriesError};
use thiserror::Error;

/// Default truncation order for series; `MOTZKIN_ORDER` overrides it.
pub const DEFAULT_ORDER: usize = 24;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("network: {0}")]
    Network(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// 1 for a failed verification, 2 for bad input or usage.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Verification(_) | Error::Series(_) => 1,
            _ => 2,
        }
    }
}

/// `MOTZKIN_ORDER` if set and valid, else [`DEFAULT_ORDER`].
pub fn default_order() -> Result<usize, Error> {
    match std::env::var("MOTZKIN_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Usage(format!("MOTZKIN_ORDER={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}
