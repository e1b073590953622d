//! Crate-wide error type.

use std::fmt;

/// Errors reported by the library.
///
/// Every operation is exact; errors signal misuse or violated
/// preconditions, never numerical trouble.
#[derive(Debug)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// A mathematically undefined request, e.g. inverting zero.
    Domain(String),
    /// A construction failed its built-in verification. This signals a
    /// bug in the arithmetic layer, not bad user input.
    ConstructionFailure(String),
    /// Input file or text could not be parsed.
    Parse(String),
    /// An operation exceeded a hard resource guard (e.g. graph export size).
    SizeGuard(String),
    /// Wrapped I/O failure.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::ConstructionFailure(m) => write!(f, "construction failure: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::SizeGuard(m) => write!(f, "size guard: {m}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
