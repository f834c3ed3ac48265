use alloc::string::String;

/// Errors raised by the toolkit.
///
/// Every variant carries a human readable description of the violated constraint.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid letter: {0}")]
    InvalidLetter(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("outside validity range: {0}")]
    ValidityRange(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("decoding failed: {0}")]
    DecodeFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! err {
    ($variant:ident, $($arg:tt)*) => {
        $crate::Error::$variant(alloc::format!($($arg)*))
    };
}

pub(crate) use err;
