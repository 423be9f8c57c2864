use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZooError {
    /// A builder parameter is outside the supported desk-scale bounds.
    #[error("PARAM_OUT_OF_RANGE: {0}")]
    ParamOutOfRange(String),

    #[error(transparent)]
    Cat(#[from] lincat_core::CatError),

    #[error(transparent)]
    Reedy(#[from] reedy::ReedyError),
}

pub type Result<T> = std::result::Result<T, ZooError>;
