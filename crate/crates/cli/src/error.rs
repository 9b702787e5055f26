use std::io;

use soliton_core::numerics::NumericsError;
use soliton_core::{CurveError, StabilityError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("malformed table: {0}")]
    Parse(String),
    #[error("verification failed: {0} check(s) failed")]
    VerificationFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
