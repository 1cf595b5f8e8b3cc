//! Error type shared by the whole toolkit.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CaError {
    #[error("{0} is not prime (and not 0)")]
    NotPrime(u32),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("ring has {have} variables but {need} are required")]
    InsufficientVariables { have: usize, need: usize },
    #[error("minor size {t} out of range for a {rows}x{cols} matrix")]
    MinorOutOfRange { t: usize, rows: usize, cols: usize },
    #[error("exponent or degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("computation exceeded its time budget")]
    Timeout,
    #[error("operation requires a homogeneous ideal")]
    NonHomogeneous,
    #[error("operation requires a proper nonzero ideal")]
    ImproperIdeal,
    #[error("ideal is not contained in the square of the irrelevant ideal")]
    NotInSquareOfIrrelevant,
    #[error("no nonzerodivisor Jacobian minor found; base is not generically smooth here")]
    NoWitness,
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type CaResult<T> = Result<T, CaError>;
