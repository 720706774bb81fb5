use thiserror::Error;

/// Errors surfaced by the algebra engine.
///
/// `Precondition` and `UnsupportedInput` indicate the caller fed the engine
/// something outside its contract; `NotStabilized` is a soft failure of the
/// partial-sum heuristic and carries enough context to retry with a larger
/// exponent cap; `Internal` flags a broken invariant inside the engine.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("partial sums did not stabilize up to e = {e_max} (window {window}); trace: {trace}")]
    NotStabilized {
        e_max: u32,
        window: u32,
        trace: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl AlgebraError {
    pub fn precondition(msg: impl Into<String>) -> Self {
        AlgebraError::Precondition(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        AlgebraError::UnsupportedInput(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        AlgebraError::Internal(msg.into())
    }
}
