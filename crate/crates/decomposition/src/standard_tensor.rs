//! The representation `Δ_z ⊗_{A_z0} V` for a left module `V` over the
//! local algebra, assembled objectwise from balanced tensor products.

use crate::error::Result;
use homalg::induced_on_quotient;
use lincat_core::{
    balanced_tensor, Algebra, AlgMod, BalancedTensor, HomElt, LinCat, MorId, Rep, RepMap, Side,
};
use reedy::{standard_module, ReedyStructure};
use scalar_linalg::Mat;
use std::collections::HashMap;

/// `Δ_z ⊗_{A_z0} V` together with the bookkeeping needed to map into or
/// out of it: the objectwise balanced-tensor structures (raw coordinates
/// versus balanced quotient) and the standard module with its defining
/// projection.
pub struct StandardTensor {
    pub z: usize,
    pub rep: Rep,
    /// One balanced tensor `Δ_z(w) ⊗_{A_z0} V` per object `w`; its raw
    /// index `(i, j)` is `i · dim V + j`.
    pub tensors: Vec<BalancedTensor>,
    pub delta: Rep,
    /// The projection `c1_z → Δ_z`.
    pub proj: RepMap,
}

/// The value `Δ_z(w)` as a right `A_z0`-module: classes `[m]` of
/// `m ∈ hom(z, w)` with `[m] · a = [m ∘ a]`.  Right multiplication by
/// `A_z0` preserves the ideal being quotiented (lowering then raising
/// composed with a degree-0 map still factors through lower degree), so the
/// action descends.
pub(crate) fn delta_right_value(
    cat: &LinCat,
    r: &ReedyStructure,
    alg: &Algebra,
    delta: &Rep,
    proj: &RepMap,
    z: usize,
    w: usize,
) -> Result<AlgMod> {
    let local = r.plus(z, z);
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let elt = HomElt { src: z, tgt: z, coeffs: local.basis_vec(i).to_vec() };
        let full = cat.pre_compose_matrix(&elt, w);
        action.push(induced_on_quotient(&proj.comps[w], &full));
    }
    Ok(AlgMod::new(alg, Side::Right, delta.dim_at(w), action)?)
}

/// Builds `Δ_z ⊗_{A_z0} V` as a left representation of the category.  The
/// action of a basis morphism is the raw Kronecker action on the Δ factor,
/// pushed through the balanced quotients (well defined because the left
/// category action commutes with the right `A_z0`-action on Δ).
pub fn standard_tensor(
    cat: &LinCat,
    r: &ReedyStructure,
    z: usize,
    v: &AlgMod,
) -> Result<StandardTensor> {
    let field = cat.field();
    let n = cat.n_objects();
    let alg = r.local_algebra(cat, z)?;
    let (delta, proj) = standard_module(cat, r, z, Side::Left)?;
    let mut tensors: Vec<BalancedTensor> = Vec::with_capacity(n);
    for w in 0..n {
        let delta_w = delta_right_value(cat, r, &alg, &delta, &proj, z, w)?;
        tensors.push(balanced_tensor(&alg, &delta_w, v)?);
    }
    let dims: Vec<usize> = tensors.iter().map(|t| t.dim()).collect();
    let mut action: HashMap<MorId, Mat> = HashMap::new();
    for mor in cat.all_basis() {
        let raw = Mat::kron(delta.act_basis(mor), &Mat::identity(field, v.dim()));
        let mat = tensors[mor.tgt]
            .quotient()
            .map_into_quotient(&raw)
            .mul(tensors[mor.src].quotient().section());
        action.insert(mor, mat);
    }
    let rep = Rep::new(cat, Side::Left, dims, action)?;
    Ok(StandardTensor { z, rep, tensors, delta, proj })
}
