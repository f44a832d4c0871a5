use thiserror::Error;

/// Errors raised while building citation vectors or evaluating indexes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("negative citation count `{0}`")]
    NegativeCitation(String),
    #[error("non-integer citation count `{0}`")]
    NonIntegerCitation(String),
    #[error("invalid citation token `{0}`")]
    InvalidToken(String),
    #[error("threshold must be at least 1, got {0}")]
    InvalidThreshold(u64),
    #[error("alpha must be finite and non-negative, got {0}")]
    InvalidAlpha(f64),
    #[error("alpha values must be sorted ascending")]
    UnsortedAlphas,
    #[error("unknown index name `{0}`")]
    UnknownIndexName(String),
    #[error("index `{0}` requires an alpha parameter")]
    MissingAlpha(String),
    #[error("index `{0}` does not take an alpha parameter")]
    UnexpectedAlpha(String),
}

pub type Result<T, E = IndexError> = std::result::Result<T, E>;
