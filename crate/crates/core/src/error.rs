use thiserror::Error;

/// Errors raised by the exact-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("module size {0} is odd; the symplectic form needs 2N entries")]
    OddSize(usize),
    #[error("determinant {0} is not a unit of the Laurent ring")]
    NotInvertible(String),
    #[error("zero vector is not a valid initial condition")]
    ZeroVector,
    #[error("cost cap exceeded: {0}")]
    CostCap(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A syntax error in one of the text grammars, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

/// Top-level error for configuration and numerics entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("config: {0}")]
    Config(String),
    #[error("numerics: {0}")]
    Numerics(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
