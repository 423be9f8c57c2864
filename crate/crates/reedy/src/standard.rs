//! Standard modules: quotients of representables by the ideal of morphisms
//! factoring through strictly lower degree.

use crate::error::Result;
use crate::ideal::ideal_i;
use crate::structure::ReedyStructure;
use lincat_core::{CatError, LinCat, Rep, RepMap, Side};

/// The standard module at `x`: for `Side::Left` the quotient of the left
/// representable `hom(x, -)` by the ideal slice `(x, -)`; for `Side::Right`
/// the quotient of `hom(-, x)` by the slice `(-, x)`.  Returns the module
/// together with the projection from the representable.
///
/// The result is supported only on objects of degree >= degree(x), its value
/// at `x` is the local degree-0 algebra, and its value at `y` matches
/// `plus(x, y)` (left) or `minus(y, x)` (right); these dimension identities
/// are verified before returning.
pub fn standard_module(
    cat: &LinCat,
    r: &ReedyStructure,
    x: usize,
    side: Side,
) -> Result<(Rep, RepMap)> {
    let ideal = ideal_i(cat, r, r.degree(x))?;
    let representable = Rep::representable(cat, x, side);
    let slices = match side {
        Side::Left => ideal.left_slice(x),
        Side::Right => ideal.right_slice(x),
    };
    let (delta, proj) = representable.quotient_rep(cat, &slices)?;
    for y in 0..cat.n_objects() {
        let expected = match side {
            Side::Left => r.plus(x, y).dim(),
            Side::Right => r.minus(y, x).dim(),
        };
        if delta.dim_at(y) != expected {
            return Err(CatError::DimensionMismatch(format!(
                "standard module at '{}' has dimension {} at '{}', expected {}",
                cat.object_name(x),
                delta.dim_at(y),
                cat.object_name(y),
                expected
            ))
            .into());
        }
        if delta.dim_at(y) > 0 && y != x && r.degree(y) <= r.degree(x) {
            return Err(CatError::DimensionMismatch(format!(
                "standard module at '{}' is supported at '{}' of degree {} <= {}",
                cat.object_name(x),
                cat.object_name(y),
                r.degree(y),
                r.degree(x)
            ))
            .into());
        }
    }
    Ok((delta, proj))
}
