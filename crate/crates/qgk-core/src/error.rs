//! Error type shared across the toolkit.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QgkError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("solver blow-up at step {step}: {detail}")]
    BlowUp { step: u64, detail: String },

    #[error("eigen-solver did not converge: {0}")]
    EigNonConvergence(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("bad file format in {path}: {detail}")]
    Format { path: PathBuf, detail: String },

    #[error("config error: {0}")]
    Config(String),
}

impl QgkError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        QgkError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn format(path: impl Into<PathBuf>, detail: impl Into<String>) -> Self {
        QgkError::Format {
            path: path.into(),
            detail: detail.into(),
        }
    }

    /// Stable process exit code for the CLI: 1 usage, 2 numerical, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            QgkError::InvalidArgument(_)
            | QgkError::ShapeMismatch(_)
            | QgkError::Config(_) => 1,
            QgkError::Numerical(_)
            | QgkError::BlowUp { .. }
            | QgkError::EigNonConvergence(_) => 2,
            QgkError::Io { .. } | QgkError::Format { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, QgkError>;
