use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not an Ehrhart polynomial of a lattice {dim}-polytope: {reason}")]
    NotEhrhart { dim: usize, reason: String },

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("root finder did not converge after {iterations} iterations on {poly}")]
    NoConvergence { poly: String, iterations: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertices are affinely dependent")]
    AffinelyDependent,

    #[error("enumeration of {needed} items exceeds budget {budget}; {hint}")]
    BudgetExceeded {
        needed: u128,
        budget: u128,
        hint: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
