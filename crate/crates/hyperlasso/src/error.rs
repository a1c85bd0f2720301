use std::path::PathBuf;

/// Errors produced by rule construction, basis evaluation and the estimators.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}:{line}: parse error: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error(
        "exactness verification failed: worst residual {residual:.3e} at {what} (tolerance {tol:.3e})"
    )]
    Exactness {
        what: String,
        residual: f64,
        tol: f64,
    },

    #[error("evaluation produced a non-finite value at node {index}")]
    NonFinite { index: usize },

    #[error("failed to read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
