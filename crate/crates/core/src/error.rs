use std::fmt;

use thiserror::Error;

/// A syntax error in one of the textual forms, with the byte offset at which
/// it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }

    pub(crate) fn shifted(mut self, by: usize) -> Self {
        self.pos += by;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative exponent in denominator T^{a} (T-1)^{b}")]
    NegativeExponent { a: i64, b: i64 },
    #[error("cannot evaluate at a pole (t = {0})")]
    Pole(String),
    #[error("Chebyshev index must be at least -1, got {0}")]
    ChebyshevIndex(i64),
    #[error("vertex indices must be mutually distinct elements of 0..=3: {0:?}")]
    IndexTuple(Vec<u8>),
    #[error("element does not lie in the loop algebra sl2 (x) K[T, T^-1]")]
    NotInLoopAlgebra,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
