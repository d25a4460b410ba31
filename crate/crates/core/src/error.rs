use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("group map has not been validated as an automorphism")]
    InvalidMap,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("subset is not invariant under the group")]
    InvariantViolation,

    #[error("subgroup generators are not contained in the group")]
    Containment,

    #[error("connection sets violate the bi-Cayley conditions: {0}")]
    SetCondition(String),

    #[error("permutation is not a graph automorphism: {0}")]
    NotAutomorphism(String),

    #[error("no root of x^2 - x + 1 modulo {0}")]
    NoLambda(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
