use thiserror::Error;

/// Errors raised while building or manipulating categories and their
/// representations.
///
/// Axiom violations are reported with enough context (object/morphism names)
/// to locate the offending datum in the input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CatError {
    /// A category axiom (unit law, associativity, identity function shape)
    /// failed. `law` names the axiom, `detail` the offending triple.
    #[error("category axiom violated ({law}): {detail}")]
    AxiomViolation { law: String, detail: String },

    /// Two distinct objects of a supposedly skeletal category are isomorphic.
    #[error("NOT_SKELETAL: objects '{x}' and '{y}' are isomorphic via '{f}' / '{g}'")]
    NotSkeletal { x: String, y: String, f: String, g: String },

    /// A composite of two listed morphisms is not itself listed (and no
    /// explicit table entry was supplied).
    #[error("composition not closed: {g} o {f} has no matching morphism {detail}")]
    CompositionNotClosed { g: String, f: String, detail: String },

    /// An object, morphism, or basis index referred to data that does not
    /// exist.
    #[error("unknown reference: {0}")]
    UnknownReference(String),

    /// Dimensions of matrices, carriers, or coefficient vectors disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// NOT_A_SUBMODULE: the given per-object subspaces are not stable under
    /// the action; the violating basis morphism is named.
    #[error("NOT_A_SUBMODULE: subspace not stable under action of '{morphism}'")]
    NotASubmodule { morphism: String },

    /// A subspace of an endomorphism algebra is not closed under the product
    /// (or does not contain the requested unit).
    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),

    /// A subspace fails the two-sided ideal condition of an algebra.
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
}

pub type Result<T> = std::result::Result<T, CatError>;
