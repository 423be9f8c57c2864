//! Membership in the two lifted classes of modules.
//!
//! Fix for every object `x` a class `S_x` of modules over the local
//! degree-0 algebra.  A left module `Y` lies in the first lifted class when
//! every latching map is monic with cokernel in `S_x`, and in the second
//! when every matching map is epic with kernel in `S_x`.  Both conditions
//! are computed twice: once from the latching/matching maps directly, and
//! once through the derived characterization — the latching map is monic
//! iff `Tor_1(standard-dual(x), Y) = 0` with cokernel
//! `standard-dual(x) (x)_C Y`, and the matching map is epic iff
//! `Ext^1(standard(x), Y) = 0` with kernel `Hom(standard(x), Y)`.  Any
//! disagreement is reported as an internal error.

use crate::error::{HomalgError, Result};
use crate::latmatch::latching_matching;
use crate::present::{ext1, flatten_map};
use crate::tensor::{rep_tensor, tor1};
use lincat_core::{hom_reps, AlgMod, Algebra, HomElt, LinCat, Rep, RepMap, Side};
use reedy::{standard_module, ReedyStructure};
use scalar_linalg::{Mat, Scalar};

/// A per-object class of modules over the local degree-0 algebras, closed
/// under isomorphism.
pub trait ClassTester {
    fn label(&self) -> &str;
    fn contains(&self, x: usize, alg: &Algebra, m: &AlgMod) -> bool;
}

/// Every module; membership degenerates to the monic/epic conditions.
pub struct AllModules;
impl ClassTester for AllModules {
    fn label(&self) -> &str {
        "all"
    }
    fn contains(&self, _x: usize, _alg: &Algebra, _m: &AlgMod) -> bool {
        true
    }
}

/// Only the zero module.
pub struct ZeroModules;
impl ClassTester for ZeroModules {
    fn label(&self) -> &str {
        "zero"
    }
    fn contains(&self, _x: usize, _alg: &Algebra, m: &AlgMod) -> bool {
        m.dim() == 0
    }
}

pub struct ProjectiveModules;
impl ClassTester for ProjectiveModules {
    fn label(&self) -> &str {
        "projective"
    }
    fn contains(&self, _x: usize, alg: &Algebra, m: &AlgMod) -> bool {
        m.is_projective(alg)
    }
}

pub struct InjectiveModules;
impl ClassTester for InjectiveModules {
    fn label(&self) -> &str {
        "injective"
    }
    fn contains(&self, _x: usize, alg: &Algebra, m: &AlgMod) -> bool {
        m.is_injective(alg)
    }
}

/// Per-object evidence for the membership verdicts.
pub struct ObjectWitness {
    pub x: usize,
    pub latching_dim: usize,
    pub matching_dim: usize,
    pub l_monic: bool,
    pub coker_in_class: bool,
    pub tor1_dim: usize,
    pub m_epic: bool,
    pub ker_in_class: bool,
    pub ext1_dim: usize,
}

pub struct PhiPsiReport {
    pub in_phi: bool,
    pub in_psi: bool,
    pub witnesses: Vec<ObjectWitness>,
}

/// Transports `full` (an endomorphism of the ambient space) down a
/// surjection `proj` along which it descends: the unique `Q` with
/// `Q proj = proj full`.
pub fn induced_on_quotient(proj: &Mat, full: &Mat) -> Mat {
    let rhs = proj.mul(full).transpose();
    let sol = proj
        .transpose()
        .solve(&rhs)
        .expect("the map descends to the quotient");
    sol.particular.transpose()
}

/// The ambient hom element of the `i`-th local algebra basis vector at `x`.
fn local_elt(r: &ReedyStructure, alg: &Algebra, x: usize, i: usize) -> HomElt {
    HomElt {
        src: x,
        tgt: x,
        coeffs: r.plus(x, x).lincomb(&alg.basis_vec(i)),
    }
}

/// `standard-dual(x) (x)_C Y` as a left module over the local algebra at
/// `x` (acting by post-composition on the first leg).
pub fn tensor_with_dual_standard(
    cat: &LinCat,
    r: &ReedyStructure,
    alg: &Algebra,
    x: usize,
    y: &Rep,
) -> Result<AlgMod> {
    let (delta_dual, proj) = standard_module(cat, r, x, Side::Right)?;
    let t = rep_tensor(cat, &delta_dual, y)?;
    let field = cat.field();
    let action: Vec<Mat> = (0..alg.dim())
        .map(|i| {
            let a = local_elt(r, alg, x, i);
            let blocks: Vec<Mat> = (0..cat.n_objects())
                .map(|w| {
                    let on_quotient = if delta_dual.dim_at(w) == 0 {
                        Mat::zero(field, 0, 0)
                    } else {
                        induced_on_quotient(&proj.comps[w], &cat.post_compose_matrix(&a, w))
                    };
                    Mat::kron(&on_quotient, &Mat::identity(field, y.dim_at(w)))
                })
                .collect();
            let refs: Vec<&Mat> = blocks.iter().collect();
            let raw = Mat::block_diag(field, &refs);
            t.quot.map_into_quotient(&raw).mul(t.quot.section())
        })
        .collect();
    Ok(AlgMod::new(alg, Side::Left, t.dim(), action)?)
}

/// `Hom(standard(x), Y)` as a left module over the local algebra at `x`
/// (acting by right multiplication on the standard module).
pub fn hom_from_standard(
    cat: &LinCat,
    r: &ReedyStructure,
    alg: &Algebra,
    x: usize,
    y: &Rep,
) -> Result<AlgMod> {
    let (delta, proj) = standard_module(cat, r, x, Side::Left)?;
    let basis = hom_reps(cat, &delta, y);
    let field = cat.field();
    if basis.is_empty() {
        return Ok(AlgMod::new(alg, Side::Left, 0, vec![
            Mat::zero(field, 0, 0);
            alg.dim()
        ])?);
    }
    let flat_cols: Vec<Vec<Scalar>> = basis.iter().map(flatten_map).collect();
    let flat_mat = Mat::from_cols(field, &flat_cols);
    let action: Vec<Mat> = (0..alg.dim())
        .map(|i| {
            let a = local_elt(r, alg, x, i);
            // Right multiplication by `a` on the standard module.
            let comps: Vec<Mat> = (0..cat.n_objects())
                .map(|w| {
                    if delta.dim_at(w) == 0 {
                        Mat::zero(field, 0, 0)
                    } else {
                        induced_on_quotient(&proj.comps[w], &cat.pre_compose_matrix(&a, w))
                    }
                })
                .collect();
            let r_a = RepMap::from_parts_unchecked(delta.clone(), delta.clone(), comps);
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|u| {
                    let moved = flatten_map(&u.compose(&r_a));
                    let sol = flat_mat
                        .solve(&Mat::column(field, &moved))
                        .expect("hom space is closed under the local action");
                    sol.particular.col(0)
                })
                .collect();
            Mat::from_cols(field, &cols)
        })
        .collect();
    Ok(AlgMod::new(alg, Side::Left, basis.len(), action)?)
}

pub fn phi_psi_membership(
    cat: &LinCat,
    r: &ReedyStructure,
    y: &Rep,
    tester: &dyn ClassTester,
) -> Result<PhiPsiReport> {
    let mut in_phi = true;
    let mut in_psi = true;
    let mut witnesses = Vec::new();
    for x in 0..cat.n_objects() {
        let data = latching_matching(cat, r, y, x)?;
        let alg = &data.algebra;

        let coker_in_class = tester.contains(x, alg, &data.coker_module);
        let ker_in_class = tester.contains(x, alg, &data.ker_module);

        // Independent derived route.
        let (delta_dual, _) = standard_module(cat, r, x, Side::Right)?;
        let tor1_dim = tor1(cat, &delta_dual, y)?;
        let tensor_mod = tensor_with_dual_standard(cat, r, alg, x, y)?;
        let (delta, _) = standard_module(cat, r, x, Side::Left)?;
        let ext = ext1(cat, &delta, y)?;
        let hom_mod = hom_from_standard(cat, r, alg, x, y)?;

        let agree = data.l_monic == (tor1_dim == 0)
            && data.coker_l_dim == tensor_mod.dim()
            && coker_in_class == tester.contains(x, alg, &tensor_mod)
            && data.m_epic == (ext.dim == 0)
            && data.ker_m_dim == hom_mod.dim()
            && ker_in_class == tester.contains(x, alg, &hom_mod);
        if !agree {
            return Err(HomalgError::CheckFailed(format!(
                "latching/matching route and derived route disagree at {}: \
                 l monic {} vs Tor1 {}, coker dim {} vs tensor dim {}, \
                 m epic {} vs Ext1 {}, ker dim {} vs hom dim {}",
                cat.object_name(x),
                data.l_monic,
                tor1_dim,
                data.coker_l_dim,
                tensor_mod.dim(),
                data.m_epic,
                ext.dim,
                data.ker_m_dim,
                hom_mod.dim()
            )));
        }

        in_phi &= data.l_monic && coker_in_class;
        in_psi &= data.m_epic && ker_in_class;
        witnesses.push(ObjectWitness {
            x,
            latching_dim: data.latching_dim,
            matching_dim: data.matching_dim,
            l_monic: data.l_monic,
            coker_in_class,
            tor1_dim,
            m_epic: data.m_epic,
            ker_in_class,
            ext1_dim: ext.dim,
        });
    }
    Ok(PhiPsiReport { in_phi, in_psi, witnesses })
}
