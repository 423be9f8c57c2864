//! The standard filtration of a representable module.
//!
//! When the degree-raising homs are projective right modules and the
//! degree-lowering homs are projective left modules over the local degree-0
//! algebras, the representable `hom(x, -)` is filtered by the two-sided
//! ideals of morphisms factoring below degree `gamma`, and the level-`gamma`
//! factor is the sum over degree-`gamma` objects `z` of
//! `standard(z) (x)_{A_z} minus(x, z)` — so its dimension at `y` is the
//! `z`-block dimension of the factorization isomorphism.

use crate::error::{HomalgError, Result};
use lincat_core::{balanced_tensor, LinCat, Rep, Side};
use reedy::{ideal_i, ReedyStructure};
use scalar_linalg::Subspace;

pub struct FiltrationLevel {
    pub gamma: u32,
    /// Objects of degree `gamma`.
    pub zs: Vec<usize>,
    /// The subquotient `ideal_{gamma+1}(x, -) / ideal_gamma(x, -)`.
    pub factor: Rep,
    /// Blockwise dimensions predicted by the factorization isomorphism.
    pub expected_dims: Vec<usize>,
}

pub struct Filtration {
    pub x: usize,
    pub levels: Vec<FiltrationLevel>,
}

/// Verifies the projectivity hypotheses on the designated families.
pub fn check_filtration_hypotheses(cat: &LinCat, r: &ReedyStructure) -> Result<()> {
    for z in 0..cat.n_objects() {
        let alg = r.local_algebra(cat, z)?;
        for y in 0..cat.n_objects() {
            if !r.plus_right_module(cat, z, y)?.is_projective(&alg) {
                return Err(HomalgError::HypothesisFailed(format!(
                    "plus({}, {}) is not projective as a right module over the \
                     local algebra at {}",
                    cat.object_name(z),
                    cat.object_name(y),
                    cat.object_name(z)
                )));
            }
        }
        for w in 0..cat.n_objects() {
            if !r.minus_left_module(cat, w, z)?.is_projective(&alg) {
                return Err(HomalgError::HypothesisFailed(format!(
                    "minus({}, {}) is not projective as a left module over the \
                     local algebra at {}",
                    cat.object_name(w),
                    cat.object_name(z),
                    cat.object_name(z)
                )));
            }
        }
    }
    Ok(())
}

pub fn filtration_of_representable(
    cat: &LinCat,
    r: &ReedyStructure,
    x: usize,
) -> Result<Filtration> {
    check_filtration_hypotheses(cat, r)?;
    let field = cat.field();
    let representable = Rep::representable(cat, x, Side::Left);

    let mut levels = Vec::new();
    let mut running_dims = vec![0usize; cat.n_objects()];
    for gamma in 0..=r.degree(x) {
        let lo = ideal_i(cat, r, gamma)?.left_slice(x);
        let hi = ideal_i(cat, r, gamma + 1)?.left_slice(x);
        let (sub, _) = representable.sub_rep(cat, &hi)?;
        // Express the lower slice inside the upper one and quotient.
        let inner: Vec<Subspace> = (0..cat.n_objects())
            .map(|y| {
                let vecs: Vec<Vec<scalar_linalg::Scalar>> = (0..lo[y].dim())
                    .map(|i| {
                        hi[y].coords_of(lo[y].basis_vec(i)).expect(
                            "ideals are nested: the lower slice lies in the upper one",
                        )
                    })
                    .collect();
                Subspace::from_spanning(field, hi[y].dim(), &vecs)
            })
            .collect();
        let (factor, _) = sub.quotient_rep(cat, &inner)?;

        let zs: Vec<usize> = (0..cat.n_objects()).filter(|&z| r.degree(z) == gamma).collect();
        let mut expected_dims = vec![0usize; cat.n_objects()];
        for y in 0..cat.n_objects() {
            for &z in &zs {
                let alg = r.local_algebra(cat, z)?;
                let t = balanced_tensor(
                    &alg,
                    &r.plus_right_module(cat, z, y)?,
                    &r.minus_left_module(cat, x, z)?,
                )?;
                expected_dims[y] += t.dim();
            }
        }
        if factor.dims() != expected_dims.as_slice() {
            return Err(HomalgError::CheckFailed(format!(
                "filtration factor at level {gamma} of hom({}, -) has dimensions \
                 {:?}, expected {:?}",
                cat.object_name(x),
                factor.dims(),
                expected_dims
            )));
        }
        for y in 0..cat.n_objects() {
            running_dims[y] += factor.dim_at(y);
        }
        levels.push(FiltrationLevel { gamma, zs, factor, expected_dims });
    }
    if running_dims.as_slice() != representable.dims() {
        return Err(HomalgError::CheckFailed(format!(
            "filtration levels of hom({}, -) total {:?}, expected {:?}",
            cat.object_name(x),
            running_dims,
            representable.dims()
        )));
    }
    Ok(Filtration { x, levels })
}
