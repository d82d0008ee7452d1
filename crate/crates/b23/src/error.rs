use b23_core::codec::{ContainerError, DecodeError};
use b23_core::combinatorics::{CountError, DistributionError};
use b23_core::{ParseBitsError, UnsupportedChar};
use std::path::PathBuf;
use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    /// Unsupported input, bad arguments, IO failures.
    Failure = 1,
    /// The data to decode is malformed.
    Malformed = 2,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Unsupported(#[from] UnsupportedChar),
    #[error("input is not valid UTF-8 at byte offset {offset}")]
    InvalidUtf8 { offset: usize },
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("malformed bitstring: {0}")]
    Bits(#[from] ParseBitsError),
    #[error("{0}")]
    Distribution(#[from] DistributionError),
    #[error("{0}")]
    Count(#[from] CountError),
    #[error("{path}: {message}")]
    DistributionFile { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl From<ContainerError> for CliError {
    fn from(e: ContainerError) -> Self {
        CliError::Decode(DecodeError::Container(e))
    }
}

impl CliError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> CliError {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Decode(_) | CliError::Bits(_) => ExitStatus::Malformed,
            _ => ExitStatus::Failure,
        }
    }
}
