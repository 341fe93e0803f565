use thiserror::Error;

/// Errors raised by the exact-arithmetic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation's precondition does not hold for this input; this is not
    /// a failed check.
    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown group label `{0}`")]
    UnknownGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
