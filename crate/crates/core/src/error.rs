use std::fmt;

/// Error type shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inversion or division of a zero element.
    DivisionByZero,
    /// A precondition on the arguments does not hold (bad modulus, index
    /// out of range, skew lines, zero coefficient, ...).
    InvalidArgument(String),
    /// A bounded search ran out of budget (point sampling, prime search).
    SearchExhausted(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::SearchExhausted(msg) => write!(f, "search exhausted: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for `Error::InvalidArgument` with a formatted message.
macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidArgument(format!($($arg)*))
    };
}

pub(crate) use invalid;
