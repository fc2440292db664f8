use thiserror::Error;

/// Errors raised by every layer of the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("argument error: {0}")]
    Argument(String),
    #[error("ambiguity error: {0}")]
    Ambiguity(String),
    #[error("resource error: {0}")]
    Resource(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("constraint error: {0}")]
    Constraint(String),
    #[error("ingestion error: {0}")]
    Ingestion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
