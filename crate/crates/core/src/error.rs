use thiserror::Error;

/// Errors from the exact layer. These are hard failures: every one of them
/// means either a caller violated a documented precondition or an internal
/// cross-check (two independent computation routes) disagreed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("internal cross-check mismatch: {0}")]
    InternalMismatch(String),

    #[error("series has no inverse: constant term is not a unit")]
    NonUnitConstantTerm,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("domain violation: {0}")]
    Domain(String),
}
