use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("singular linear change of coordinates")]
    SingularChange,
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    #[error("generic initial ideal not certified: {0}")]
    GinCertification(String),
    #[error("coefficient {0} is not defined in the coefficient field")]
    BadCoefficient(String),
    #[error("not realizable as a Hilbert polynomial: {0}")]
    NotRealizable(String),
    #[error("no solution: {0}")]
    Infeasible(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
