//! Crate-wide error type.
//!
//! Variants separate bad input (rejected preconditions, oversized brute-force
//! requests) from violated internal assertions (integrality or reconstruction
//! failures that indicate a bug rather than a bad argument).  The CLI maps
//! the two groups to distinct exit codes.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("series logarithm needs constant term 1, found {found}")]
    NonUnitConstantTerm { found: String },

    #[error("series exponential needs constant term 0, found {found}")]
    NonzeroConstantTerm { found: String },

    #[error("residual pole of order {order} at q = 1")]
    PoleAtOne { order: u64 },

    #[error("{0}")]
    InvalidInput(String),

    #[error("brute-force enumeration over {edges} possible edges exceeds the limit of {limit}")]
    BruteForceTooLarge { edges: u64, limit: u64 },

    #[error("set-partition check over a ground set of size {size} exceeds the limit of {limit}")]
    GroundSetTooLarge { size: u64, limit: u64 },

    #[error("index {index} lies outside the diagonal-relaxation set of {base}")]
    NotInRelaxationSet { index: String, base: String },

    #[error("degree cap {cap} is below the required total degree {needed}")]
    DegreeCapTooSmall { cap: u32, needed: u32 },

    #[error("finite differences of order beyond the cap do not vanish at {at}; values are not polynomial of the expected degree")]
    NonvanishingDifferences { at: String },

    #[error("integrality assertion failed in {context}: {detail}")]
    Integrality { context: String, detail: String },

    #[error("basis reconstruction mismatch at grid point {at} even after box extension")]
    ReconstructionMismatch { at: String },

    #[error("expected divisibility by (q-1)^{expected}, found vanishing order {found}")]
    DivisibilityFailure { expected: u64, found: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
