use thiserror::Error;

/// Errors produced by the numeral-system operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A digit string that does not fit the system it was built for.
    #[error("invalid numeral: {0}")]
    InvalidNumeral(String),

    #[error("value {value} is out of range; the system represents 0..={max}")]
    OutOfRange { value: String, max: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("tree has {size} vertices, which exceeds the enumeration guard of {guard}")]
    TooLarge { size: String, guard: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
