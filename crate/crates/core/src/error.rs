use thiserror::Error;

/// Errors raised by the field, polynomial, and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands belong to different fields or levels, or no embedding exists.
    #[error("structural error: {0}")]
    Structural(String),

    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive computation would exceed its configured bound.
    #[error("resource bound exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceBound {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    /// Malformed textual input (coefficient lists, JSON records).
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency assertion failed. Indicates a bug.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn structural<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Structural(msg.into()))
}

pub(crate) fn check_bound(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::ResourceBound {
            what,
            needed,
            limit,
        })
    } else {
        Ok(())
    }
}
