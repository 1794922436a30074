use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at q = 0")]
    ZeroEvaluation,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mixed-parity operator where a homogeneous one is required")]
    MixedParity,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
