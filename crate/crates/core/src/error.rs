use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a Lie algebra: {0}")]
    NotClosed(String),
    #[error("matrices do not preserve the form: {0}")]
    NotCompatible(String),
    #[error("basis is linearly dependent")]
    Dependent,
    #[error("not a Weyl tensor: {0}")]
    NotWeyl(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
