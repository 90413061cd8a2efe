use thiserror::Error;

/// Errors raised by the engine. Everything here is a domain error: a
/// malformed input or a request outside the supported range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("index {index} exceeds p = {p} in the map I")]
    MapIDomain { index: i32, p: u32 },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
