use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Modulus 1 collapses the coefficient ring; a caller asking for it is
    /// almost certainly confused, so it is rejected everywhere.
    #[error("modulus 1 is rejected: the coefficient ring Z/1Z is trivial")]
    TrivialModulus,

    /// A Laurent polynomial that already carries a modulus cannot be reduced again.
    #[error("polynomial already has modulus {0}; expected an integer-coefficient polynomial")]
    ModulusSet(u64),

    #[error("matrix is not unimodular: |det| = {det}")]
    NotUnimodular { det: BigInt },

    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("parameter `{name}` must be positive, got {got}")]
    NonPositive { name: &'static str, got: i64 },

    #[error("wreath base exponent must be at least 2, got {got}")]
    BaseTooSmall { got: u64 },

    #[error("wreath base exponents differ: {left} vs {right}")]
    BaseMismatch { left: u64, right: u64 },

    #[error("semidirect elements act by different matrices")]
    ActionMismatch,

    #[error("word is trivial; it has no non-commuting generator")]
    TrivialWord,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid matrix input: {0}")]
    MatrixFormat(String),

    #[error("invalid JSON value: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
