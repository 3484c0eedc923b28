use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("work cap exceeded: {0}")]
    CapExceeded(String),

    /// Two independent computations of the same quantity disagreed.
    /// Always a bug; never swallowed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
