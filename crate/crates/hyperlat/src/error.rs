//! Crate-wide error type.

/// Errors raised by the engine.
///
/// `Structure` covers malformed tables and shape problems, which are kept
/// distinct from axiom failures: a structurally sound ring that violates a
/// hyperring axiom is reported through [`crate::ring::ValidationReport`],
/// not through this type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structure(String),
    #[error("carrier size {n} exceeds limit {max}")]
    CarrierTooLarge { n: usize, max: usize },
    #[error("not a hyperideal: {0}")]
    NotHyperideal(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
