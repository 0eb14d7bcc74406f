use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible dimensions (matrix shapes, module ranks).
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The zero polynomial or zero vector was passed where a nonzero one is
    /// required (e.g. leading-term access, S-polynomial construction).
    #[error("zero input: {0}")]
    ZeroInput(String),

    /// The operation is not defined over the active coefficient domain.
    #[error("unsupported over this coefficient domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
