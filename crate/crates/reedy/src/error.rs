//! Errors for Reedy-structure computations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReedyError {
    /// The composition map ρ is not bijective at the named pair, so Reedy
    /// factorization is unavailable there.
    #[error("RHO_NOT_ISO: the composition map at ({x}, {y}) has domain dimension {domain}, codomain dimension {codomain}, rank {rank}")]
    RhoNotIso {
        x: String,
        y: String,
        domain: usize,
        codomain: usize,
        rank: usize,
    },
    /// The transitive closure of a degree-direction relation identified two
    /// distinct objects, so the structure cannot be Reedy.
    #[error("ANTISYMMETRY_VIOLATION: objects '{x}' and '{y}' are comparable in both directions under the {relation} relation")]
    AntisymmetryViolation {
        relation: String,
        x: String,
        y: String,
    },
    #[error(transparent)]
    Cat(#[from] lincat_core::CatError),
}

pub type Result<T> = std::result::Result<T, ReedyError>;
