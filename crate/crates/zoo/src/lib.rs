//! A zoo of small linear Reedy categories plus seeded random modules.
//!
//! Every instance is tiny enough for exhaustive checking (hom spaces of a
//! few dozen dimensions at most) yet jointly they cover the interesting
//! structural axes: direct vs. inverse vs. genuinely mixed, trivial vs.
//! nontrivial local algebras, function-backed vs. abstract composition
//! tables, and characteristic 0 vs. characteristic p coefficients.
//!
//! | builder | shape |
//! |---|---|
//! | [`fin_all`] | finite sets, all functions (mixed, symmetric group local algebras) |
//! | [`fin_inj`] | finite sets, injections (direct) |
//! | [`fin_surj`] | finite sets, surjections (inverse) |
//! | [`delta_plus`] | order-preserving injections (direct, trivial local algebras) |
//! | [`cyclic`] | cyclic order preserving maps (mixed, cyclic group local algebras) |
//! | [`vect_fq`] | F_q-vector spaces, all linear maps (mixed, general linear local algebras) |
//! | [`poset_chain_meets`] | a chain poset with carriers (direct, has meets) |
//! | [`quiver_ab`] / [`quiver_ab_op`] | one arrow, direct / inverse reading |
//! | [`dual_numbers`] | one object with `k[t]/(t^2)` (non-semisimple local algebra) |

mod error;
mod instances;
mod random;

pub use error::{Result, ZooError};
pub use instances::{
    cyclic, delta_plus, dual_numbers, fin_all, fin_inj, fin_surj, poset_chain_meets,
    quiver_ab, quiver_ab_op, vect_fq, Instance,
};
pub use random::{battery, random_rep};

#[cfg(test)]
mod tests;
