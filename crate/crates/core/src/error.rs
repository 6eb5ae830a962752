use thiserror::Error;

/// Errors raised by the exact-arithmetic constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible field extensions: radicand {left} vs {right}")]
    RadicandMismatch { left: String, right: String },

    #[error("invalid radicand {0}: must be positive and not a rational square")]
    InvalidRadicand(String),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("{name}={value} out of {range}")]
    OutOfRange {
        name: String,
        value: String,
        range: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not rational: {0}")]
    NotRational(String),

    #[error("no real root: {0}")]
    NoRealRoot(String),

    #[error("not a leaning box: {0}")]
    NotLeaningBox(String),

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn out_of_range(name: impl Into<String>, value: impl std::fmt::Display, range: &'static str) -> Self {
        Error::OutOfRange {
            name: name.into(),
            value: value.to_string(),
            range,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
