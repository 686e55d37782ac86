use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("not an admissible L-space staircase polynomial: {0}")]
    NotStaircase(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("not a knot complex: {0}")]
    NotKnotComplex(String),

    #[error("{0}")]
    CapExceeded(String),

    #[error("{0}")]
    NotStandard(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}
