use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated a precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two objects that must share an ambient ring do not.
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A count or intermediate value does not fit the counter width.
    #[error("size overflow: {0}")]
    Overflow(String),

    /// The requested enumeration exceeds the configured ceiling.
    #[error("size guard tripped: {what} needs {count} items, ceiling is {ceiling}")]
    SizeGuard {
        what: String,
        count: u128,
        ceiling: u128,
    },

    /// Malformed textual input.
    #[error("parse error at {position}: {message} (token `{token}`)")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    /// A generating set was requested without any completeness bound.
    #[error("uncertified seed: {0}")]
    Uncertified(String),

    /// The Hilbert series numerator did not stabilise within the degree bound.
    #[error("k_max insufficient: h-polynomial tail {tail:?} is not zero")]
    NotStabilized { tail: Vec<i128> },

    /// Buchberger exceeded its step ceiling.
    #[error("step ceiling of {0} reduction steps reached")]
    StepLimit(usize),

    #[error("unknown scenario `{name}`; available: {available}")]
    UnknownScenario { name: String, available: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
