use thiserror::Error;

/// Errors surfaced by the library and the `mexstat` binary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad arguments, unknown identifiers, empty inputs.
    #[error("usage error: {0}")]
    Usage(String),
    /// Input is well formed but outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds what the chosen method can compute within configured limits.
    #[error("capacity error: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
