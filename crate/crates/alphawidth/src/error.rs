//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An exact solver was asked for an instance beyond its documented cap.
    #[error("{operation}: instance size {size} exceeds the desk-scale cap {cap}")]
    SizeCap {
        operation: &'static str,
        size: usize,
        cap: usize,
    },

    /// Malformed textual input (graph6, DIMACS, certificate JSON).
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Structurally invalid argument (bad edge, bad certificate, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal invariant that the underlying proofs guarantee failed.
    /// Seeing this is a bug in the library or a genuine counterexample.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
