use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated an operation's documented domain.
    #[error("invalid input: {0}")]
    InputDomain(String),

    /// A search or enumeration would exceed its configured budget.
    #[error("{what}: estimated work {estimate} exceeds budget {budget}")]
    Budget {
        what: String,
        estimate: String,
        budget: String,
    },

    /// Interval arithmetic could not separate the two sides of an inequality.
    #[error("precision exhausted: {0}")]
    Precision(String),

    /// Inputs that contradict each other (e.g. a row outside the given span).
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    /// Malformed alist text.
    #[error("alist parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A fixed-point iteration did not settle.
    #[error("iteration did not converge: {0}")]
    NonConvergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InputDomain(msg.into()))
}
