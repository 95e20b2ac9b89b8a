use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// The CLI maps these onto exit codes: invalid input is a usage error,
/// resource/budget violations are resource errors, and `CheckFailed` /
/// `ConstructionFailure` are mathematical failures.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched field contexts")]
    CtxMismatch,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An identity the construction guarantees failed to hold. Always a bug.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),

    /// A cross-check between two independent computations disagreed.
    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("search interrupted (checkpoint written)")]
    Interrupted,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CoreError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CoreError::InvalidInput(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        CoreError::ResourceLimit(msg.into())
    }
}
