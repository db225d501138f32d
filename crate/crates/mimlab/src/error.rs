//! Crate-wide error type. The CLI maps variants onto exit codes
//! (1 usage/config, 2 I/O, 3 numerical failure).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    #[error("{op}: invalid argument: {msg}")]
    InvalidArgument { op: &'static str, msg: String },

    #[error("backward requires a scalar loss, got shape {shape:?}")]
    NonScalarLoss { shape: Vec<usize> },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    #[error("gradient check failed: max relative error {max_rel_err:e} exceeds {tol:e} at coordinate {coord}")]
    GradCheck {
        max_rel_err: f64,
        tol: f64,
        coord: usize,
    },

    #[error("{path}: parse error at byte {offset}: {msg}")]
    PpmParse {
        path: String,
        offset: usize,
        msg: String,
    },

    #[error("{path}:{line}: config error: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("checkpoint error at byte {offset}: {msg}")]
    Checkpoint { offset: usize, msg: String },

    #[error("mask error: {0}")]
    Mask(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(op: &'static str, msg: impl Into<String>) -> Self {
        Error::InvalidArgument {
            op,
            msg: msg.into(),
        }
    }

    /// Process exit code for the CLI: 1 usage/config, 2 I/O, 3 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } | Error::InvalidArgument { .. } | Error::Mask(_) => 1,
            Error::Io(_) | Error::PpmParse { .. } | Error::Checkpoint { .. } => 2,
            Error::ShapeMismatch { .. }
            | Error::NonScalarLoss { .. }
            | Error::NonFinite { .. }
            | Error::GradCheck { .. } => 3,
        }
    }
}
