use thiserror::Error;

/// Errors raised by the exact computation kernels.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("series constant term is zero; not invertible")]
    NonInvertibleSeries,
    #[error("series shape mismatch: {0}")]
    SeriesMismatch(String),
    #[error("exponent {0:?} outside the series caps")]
    ExponentOutOfRange(Vec<usize>),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("result is not an integer: {0}")]
    NonIntegerResult(String),
    #[error("invalid input data: {0}")]
    InvalidInput(String),
    #[error("mathematical precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
