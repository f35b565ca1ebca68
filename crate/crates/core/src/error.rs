use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `Resource` means a configured cap or budget ran out; it is never a claim
/// about the underlying mathematical object (e.g. a coset enumeration that
/// exhausts its budget says nothing about the group being infinite).
/// `Timeout` is the analogous verdict for bounded searches and is reported
/// distinctly from a definitive "does not exist".
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("search budget exhausted (inconclusive): {0}")]
    Timeout(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
