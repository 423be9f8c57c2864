//! Generalized k-linear Reedy structures on finite linear categories.
//!
//! A Reedy structure designates, inside each hom space of a [`LinCat`]
//! (re-exported from `lincat-core`), a degree-raising subspace family and a
//! degree-lowering one, together with a degree function on objects.  The
//! defining property is that composition induces a bijection ρ from the
//! direct sum of balanced tensor blocks `plus(z, y) (x)_{A_z0} minus(x, z)`
//! onto every hom space, so every morphism factors uniquely (per block) as
//! "lower the degree, then raise it".
//!
//! The crate provides:
//!
//! * [`check_reedy`] — exhaustive verification of all axioms;
//! * [`rho_map`] / [`reedy_factorize`] — the composition bijection and its
//!   inverse;
//! * [`partial_orders`] — the two object orders generated by the families;
//! * [`ideal_i`] / [`ideal_i_x`] — the two-sided ideals of morphisms
//!   factoring through low degrees;
//! * [`truncate`] / [`quotient_cat`] — the full subcategory below a degree
//!   and the quotient category above it, both again Reedy;
//! * [`standard_module`] — the standard left and right modules.

mod check;
mod error;
mod ideal;
mod rho;
mod standard;
mod structure;
mod trunc;

pub use check::{check_reedy, partial_orders, AxiomResult, PartialOrders, ReedyReport};
pub use error::{ReedyError, Result};
pub use ideal::{ideal_i, ideal_i_x, Ideal};
pub use rho::{
    compose_factorization, factorize_with, reedy_factorize, rho_map, FactorTerm, RhoBlock, RhoMap,
};
pub use standard::standard_module;
pub use structure::{subcategory_lincat, ReedyStructure};
pub use trunc::{quotient_cat, truncate, QuotientData};

pub use lincat_core::LinCat;

#[cfg(test)]
mod testutil;
