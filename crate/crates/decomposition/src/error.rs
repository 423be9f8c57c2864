use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecompositionError {
    /// `morita_report` refuses to run before the projective-generator
    /// verification has passed on the instance.
    #[error("GENERATORS_NOT_VERIFIED: {0}")]
    GeneratorsNotVerified(String),
    /// Two independent computations of the same quantity disagreed, or a
    /// certified witness stopped verifying.  Always a bug, never an input
    /// property, hence an error rather than a FAIL verdict.
    #[error("internal cross-check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Homalg(#[from] homalg::HomalgError),
    #[error(transparent)]
    Reedy(#[from] reedy::ReedyError),
    #[error(transparent)]
    Cat(#[from] lincat_core::CatError),
}

pub type Result<T> = std::result::Result<T, DecompositionError>;
