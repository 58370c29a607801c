use thiserror::Error;

/// Errors raised by the engine, the combinatorics and the harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's preconditions.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A partition triple that is not an oscillating horizontal strip.
    #[error("invalid strip: {reason} (column {column})")]
    Strip { reason: String, column: u32 },

    /// A request that would need machinery this crate deliberately omits.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A cache line that failed to parse.
    #[error("corrupt cache {path} at byte offset {offset}: {reason}")]
    CacheCorrupt {
        path: String,
        offset: u64,
        reason: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
