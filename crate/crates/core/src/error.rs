use thiserror::Error;

/// Failures raised by the exact-arithmetic routines.
///
/// Verification runs never return these for a mismatch; a mismatch is a
/// failed report entry. These are reserved for calls made outside an
/// operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("argument sequence too short: need {needed} entries, got {got}")]
    Length { needed: usize, got: usize },
    #[error("{what} is limited to n <= {limit}, got {got}")]
    Guard {
        what: &'static str,
        limit: u64,
        got: u64,
    },
    #[error("series is not invertible: constant term is zero")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
