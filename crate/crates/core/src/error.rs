use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the range where the construction is defined.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A denominator Pochhammer factor vanished before the series terminated.
    #[error("division by zero: denominator Pochhammer factor vanishes at term index {index}")]
    DivisionByZero { index: usize },

    #[error("malformed rational {0:?}: expected p or p/q")]
    Parse(String),

    /// An identity that must hold failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
