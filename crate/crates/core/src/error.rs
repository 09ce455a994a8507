use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curves live on different surfaces")]
    HostMismatch,
    #[error("multicurve is not embedded: {0}")]
    NotEmbedded(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown curve name `{0}`")]
    UnknownCurve(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search exhausted: {0}")]
    NotFound(String),
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects and FFI codes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSurface(_) => "invalid-surface",
            Error::InvalidCurve(_) => "invalid-curve",
            Error::HostMismatch => "host-mismatch",
            Error::NotEmbedded(_) => "not-embedded",
            Error::Hypothesis(_) => "hypothesis",
            Error::Precondition(_) => "precondition",
            Error::UnknownCurve(_) => "unknown-curve",
            Error::Parse(_) => "parse",
            Error::NotFound(_) => "not-found",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
