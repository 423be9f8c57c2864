//! Exact linear algebra over the rationals and over prime fields.
//!
//! Everything downstream (linear categories, Reedy structures, homological
//! computations) reduces to solving linear systems with exact scalars, so this
//! crate provides the shared substrate:
//!
//! * [`Scalar`] / [`Field`] — arbitrary-precision rationals and `F_p` elements
//!   behind one enum, with no floating point anywhere.
//! * [`Mat`] — dense matrices with reduced row echelon form ([`Mat::rref`]),
//!   exact solving ([`Mat::solve`]) and kernel computation.
//! * [`Subspace`] — a subspace of `k^n` stored via a canonical RREF basis, so
//!   equality of subspaces is literal equality of the representation.
//! * [`QuotientSpace`] — `k^n / U` with an explicit projection and a section
//!   satisfying `projection . section = id`.
//! * [`VarSystem`] — an incremental builder for "many small unknowns, many
//!   linear constraints" problems (module homomorphism spaces, idempotent
//!   searches, splitting equations).
//!
//! All routines are deterministic: pivots are chosen first-from-top, bases are
//! canonical, and no randomness is used anywhere in this crate.

mod mat;
mod quotient;
mod scalar;
mod subspace;
mod system;

pub use mat::{Mat, Rref, Solution};
pub use quotient::QuotientSpace;
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use system::{SysSolution, VarBlock, VarSystem};
