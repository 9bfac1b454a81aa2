use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in the supported range")]
    InvalidModulus(u64),
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("groebner budget exceeded after {pairs} S-pair reductions")]
    BudgetExceeded { pairs: usize },
    #[error("ideal has positive dimension {0}, expected a finite scheme")]
    PositiveDimension(i64),
    #[error("curve and line are contained in one another")]
    Containment,
    #[error("composition is not proportional to the identity: {0}")]
    NotAnInverse(String),
    #[error("inconclusive after {attempts} degenerate random draws: {what}")]
    Inconclusive { attempts: usize, what: String },
    #[error("unclassified singularity profile: {0}")]
    UnclassifiedSingularity(String),
    #[error("construction certificate failed: {0}")]
    Certificate(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
