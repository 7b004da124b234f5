use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("divisibility violated: {0}")]
    Divisibility(String),

    #[error("oracle too large: {0} tuples exceeds guard {1}")]
    OracleTooLarge(u64, u64),

    #[error("argument at or near a pole: {0}")]
    Pole(String),

    #[error("argument outside admissible strip/region: {0}")]
    Region(String),

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("non-finite integrand sample at {location}: {value}")]
    NonFiniteSample { location: String, value: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
