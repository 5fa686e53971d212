//! hyperlat: a computational engine for finite multiplicative hyperrings.
//!
//! The crate builds hyperrings from tables or from the scaled-product `ℤₙ`
//! family, checks the hyperring axioms exhaustively, enumerates and
//! classifies hyperideals across the J-prime, quasi J-prime and 2-absorbing
//! J-prime classes (and their supporting classes), constructs products,
//! quotients and good homomorphisms, and runs a law suite that checks the
//! structural facts these classes obey over a deterministic instance corpus.
//!
//! Everything is exact subset algebra on bit vectors: carriers are capped at
//! 64 elements, so exhaustive O(n²)/O(n³) scans stay in desk-scale time.

pub mod classify;
pub mod construct;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod ring;
pub mod set;
pub mod spec_io;

pub use classify::{ClassificationReport, Classifier, Decision, HyperidealClass, Witness};
pub use error::{Error, Result};
pub use ideal::Hyperideal;
pub use ring::{FiniteHyperring, ValidationReport, ZnScaledSpec};
pub use set::ElemSet;

/// Default carrier cap applied by the CLI and loaders; override with the
/// `HYPERLAT_MAX_N` environment variable (hard limit 64).
pub const DEFAULT_MAX_N: usize = 36;

/// Reads the carrier cap from `HYPERLAT_MAX_N`, clamped to the bitset limit.
pub fn env_max_n() -> usize {
    std::env::var("HYPERLAT_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|v| v.min(set::MAX_CARRIER))
        .unwrap_or(DEFAULT_MAX_N)
}
