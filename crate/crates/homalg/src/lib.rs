//! Homological machinery for modules over linear Reedy categories.
//!
//! Built on exact linear algebra, everything here returns certificates
//! rather than approximations:
//!
//! * [`ProjPresentation`], [`ext1`], [`tor1`] — presentations by
//!   representables, first extension and torsion groups;
//! * [`is_projective_rep`] / [`is_injective_rep`] — exact lifting-property
//!   tests via split covers and duality;
//! * [`induce_minus`] — induction from the degree-lowering subcategory,
//!   recovering standard modules from the local algebras;
//! * [`filtration_of_representable`] — the layerwise filtration of a
//!   representable by standard modules, with dimensions cross-checked
//!   against the factorization isomorphism;
//! * [`count_irreducibles`] — objectwise counts of simple modules over the
//!   local degree-0 algebras;
//! * [`latching_matching`] — latching/matching objects computed through the
//!   full hom spaces and through the designated one-directional families,
//!   with the comparison isomorphism and the canonical factorization
//!   verified;
//! * [`phi_psi_membership`] — membership in the lifted module classes, each
//!   verdict double-checked against the `Tor`/`Ext` characterization.

mod error;
mod filtration;
mod induce;
mod irreducibles;
mod latmatch;
mod phipsi;
mod present;
mod tensor;

pub use error::{HomalgError, Result};
pub use filtration::{
    check_filtration_hypotheses, filtration_of_representable, Filtration, FiltrationLevel,
};
pub use induce::{induce_minus, MinusModule};
pub use irreducibles::{count_irreducibles, IrreducibleCount};
pub use latmatch::{latching_matching, LatchingData};
pub use phipsi::{
    hom_from_standard, induced_on_quotient, phi_psi_membership, tensor_with_dual_standard,
    AllModules, ClassTester, InjectiveModules, ObjectWitness, PhiPsiReport, ProjectiveModules,
    ZeroModules,
};
pub use present::{
    dual_rep, ext1, flatten_map, is_injective_rep, is_projective_rep, Ext1, ProjPresentation,
};
pub use tensor::{rep_tensor, tor1, RepTensor};

#[cfg(test)]
mod tests;
