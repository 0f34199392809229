use thiserror::Error;

/// Errors shared across the engine modules.
///
/// `Invariant` marks conditions that the constructions guarantee internally;
/// seeing one means the engine itself is broken, not the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("level {needed} requested but the complex is truncated at level {available}")]
    Truncation { needed: usize, available: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn dim(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
