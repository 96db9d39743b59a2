//! Error types shared across the lab.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// Configuration rejected at construction or load time.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An argument violated an operation's preconditions.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Vector/grid dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A capability required by the requested mode is missing
    /// (e.g. guided attack without decoder access).
    #[error("missing capability: {0}")]
    MissingCapability(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: configuration problems exit 2,
    /// everything else (runtime/verification failures) exits 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidArgument(_) | Error::DimensionMismatch(_) => 2,
            _ => 1,
        }
    }
}
