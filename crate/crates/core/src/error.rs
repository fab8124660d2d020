use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation bound mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// A cycle-index or unrooting division left a remainder. Pólya's theorem
    /// guarantees integrality, so this signals an internal bug.
    #[error("coefficient at {key} is not divisible by {divisor}")]
    Divisibility { key: String, divisor: u64 },

    /// A subtraction went below zero in a series that counts a set.
    #[error("negative coefficient at {key} while computing {context}")]
    NegativeCoefficient { key: String, context: &'static str },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("valence error at byte {pos}: {msg}")]
    Valence { pos: usize, msg: String },

    #[error("non-canonical code at byte {pos}: {msg}")]
    NonCanonical { pos: usize, msg: String },

    #[error("degree {degree}: catalog holds {actual} structures but the series counts {expected}")]
    CardinalityMismatch {
        degree: usize,
        expected: String,
        actual: usize,
    },

    #[error("{origin}:{line}: {msg}")]
    Fixture {
        origin: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
