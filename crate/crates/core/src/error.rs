use thiserror::Error;

/// Errors raised by the library. Identity failures are not errors; they are
/// reported through [`crate::identities::IdentityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right} z-variables")]
    RingMismatch { left: usize, right: usize },

    #[error("invalid shift: exponent {value} for z{index} is negative")]
    InvalidShift { index: usize, value: i64 },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("unsupported scheme: {0}")]
    UnsupportedScheme(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
