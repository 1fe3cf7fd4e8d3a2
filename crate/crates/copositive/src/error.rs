use thiserror::Error;

/// Errors reported by tensor construction, evaluation and parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a point with {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("coordinate index must be one of 1, 2, 3; got {0}")]
    InvalidIndex(usize),

    #[error("{0}")]
    Domain(String),

    #[error("invalid rational `{0}` (expected an integer or \"p/q\" with q > 0)")]
    ParseRational(String),

    #[error("invalid tensor document: {0}")]
    Document(String),
}
