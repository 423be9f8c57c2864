use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomalgError {
    /// A construction whose correctness depends on a stated hypothesis was
    /// invoked on an instance violating it.
    #[error("HYPOTHESIS_FAILED: {0}")]
    HypothesisFailed(String),

    /// The local algebra is outside the class this build can count
    /// irreducibles for (dimension one, or a group algebra in a
    /// characteristic not dividing the group order, over Q or F_p).
    #[error("NOT_SEMISIMPLE_UNSUPPORTED: {0}")]
    NotSemisimpleUnsupported(String),

    /// An internal cross-check between two independent routes to the same
    /// object failed; this indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),

    #[error(transparent)]
    Reedy(#[from] reedy::ReedyError),

    #[error(transparent)]
    Cat(#[from] lincat_core::CatError),
}

pub type Result<T> = std::result::Result<T, HomalgError>;
