use thiserror::Error;

/// Errors raised by the library. Every operation is pure, so an error always
/// describes a problem with the inputs or with the precision requested.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("radicands {0} and {1} are incompatible (both irrational and distinct)")]
    IncompatibleRadicands(String, String),

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn precision(msg: impl Into<String>) -> Self {
        Error::InsufficientPrecision(msg.into())
    }
}
