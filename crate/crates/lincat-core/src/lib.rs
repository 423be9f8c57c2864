//! Finite k-linear categories over exact fields, with representations,
//! endomorphism algebras, and balanced tensor products.
//!
//! The crate has two levels:
//!
//! * set level — [`ConcreteCat`] is a finite category whose morphisms may be
//!   backed by functions on finite carriers or given by abstract composition
//!   tables; the builder validates unit laws, associativity, and skeletality
//!   exhaustively;
//! * linear level — [`LinCat`] is a finite k-linear category presented by hom
//!   bases and structure constants, usually produced by [`LinCat::linearize`].
//!
//! On top of a [`LinCat`] sit left/right representations ([`Rep`]), natural
//! transformations ([`RepMap`]) with exact kernels/images/cokernels, local
//! endomorphism algebras ([`Algebra`]) with projectivity and injectivity
//! tests for their modules ([`AlgMod`]), and balanced tensor products
//! ([`BalancedTensor`]).  All linear algebra is exact (rationals or prime
//! fields), so every "is zero"/"is isomorphic" answer is a certificate, not
//! an approximation.

mod algebra;
mod concrete;
mod error;
mod lincat;
mod rep;
mod tensor;

pub use algebra::{AlgMod, Algebra, GroupBasis};
pub use concrete::{CMor, ConcreteCat, ConcreteCatBuilder};
pub use error::{CatError, Result};
pub use lincat::{AxiomReport, HomElt, LinCat, MorId};
pub use rep::{dim_hom_reps, hom_reps, Rep, RepMap, Side};
pub use tensor::{balanced_tensor, BalancedTensor};
