use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("series did not converge after {terms} terms (last error estimate {estimate:e})")]
    NonConvergence { terms: usize, estimate: f64 },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("source does not provide a {0} view")]
    WrongSourceKind(&'static str),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
