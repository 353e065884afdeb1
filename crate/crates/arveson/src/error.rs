//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Arithmetic between an exact-rational and a floating polynomial.
    #[error("coefficient mode mismatch between operands")]
    ModeMismatch,

    /// An evaluation point did not supply a value for every variable.
    #[error("missing coordinate for variable z{0}")]
    MissingCoordinate(u32),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index ({i},{j}) out of range for {rows}x{cols} matrix")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    /// A caller violated an engine precondition (CLI exit code 3).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two computation paths that must agree did not (CLI exit code 4).
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("truncation size {size} exceeds the configured cap {cap}")]
    TruncationTooLarge { size: usize, cap: usize },
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
