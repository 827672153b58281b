use thiserror::Error;

/// Errors raised by the enumeration library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A bracket string failed to parse.
    #[error(transparent)]
    Parse(#[from] crate::bracket::ParseError),

    /// A terminating hypergeometric sum was requested with parameters that
    /// do not terminate, or hit a zero denominator before terminating.
    #[error("hypergeometric: {0}")]
    Hypergeometric(String),

    /// A disk model contains a cell that is not one of the five admissible kinds.
    #[error("inadmissible cell with ends {ends:?}: {reason}")]
    InadmissibleCell { ends: Vec<usize>, reason: String },

    /// The input data set violates its structural definition.
    #[error("invalid data set: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
