use thiserror::Error;

/// Errors raised by the rate, bound and sweep machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The channel parameters do not satisfy the operation's precondition,
    /// e.g. a weak-regime power split requested with `a·P < 1`.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Malformed request (unknown suite name, bad range syntax, ...).
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
