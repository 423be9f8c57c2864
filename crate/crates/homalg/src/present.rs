//! Projective covers by representables, syzygies, first extension groups,
//! and exact projectivity / injectivity tests for category modules.
//!
//! Every representable is projective (evaluation at the representing object
//! is exact), so summing one copy of `hom(x, -)` per basis vector of `M(x)`
//! gives a projective `P0` with an evaluation epimorphism onto `M`.  The
//! kernel of that epimorphism is the syzygy; `Ext^1(M, N)` is the cokernel
//! of restriction `Hom(P0, N) -> Hom(syzygy, N)`.

use crate::error::Result;
use lincat_core::{hom_reps, LinCat, MorId, Rep, RepMap, Side};
use scalar_linalg::{Mat, Scalar, Subspace};
use std::collections::HashMap;

/// The k-linear dual of a representation: same dimensions, transposed
/// actions, opposite side (over the same category).
pub fn dual_rep(cat: &LinCat, m: &Rep) -> Rep {
    let mut action = HashMap::new();
    for mor in cat.all_basis() {
        action.insert(mor, m.act_basis(mor).transpose());
    }
    Rep::from_parts_unchecked(cat, m.side().flip(), m.dims().to_vec(), action)
        .expect("dual has matching shapes")
}

/// Fixed flattening of a natural transformation into one coordinate vector
/// (object by object, row-major), used to do linear algebra on hom spaces.
pub fn flatten_map(u: &RepMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for c in &u.comps {
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                out.push(c[(i, j)].clone());
            }
        }
    }
    out
}

/// A one-step presentation `0 -> syzygy -> P0 -> M -> 0` with `P0` a sum of
/// representables, one per chosen generator.
pub struct ProjPresentation {
    pub p0: Rep,
    /// `(x, k)`: the copy of the representable at `x` hitting the `k`-th
    /// basis vector of `M(x)`.
    pub p0_gens: Vec<(usize, usize)>,
    /// The evaluation epimorphism `P0 -> M`.
    pub eval: RepMap,
    pub syzygy: Rep,
    /// The inclusion `syzygy -> P0`.
    pub incl: RepMap,
}

impl ProjPresentation {
    pub fn new(cat: &LinCat, m: &Rep) -> Result<ProjPresentation> {
        let side = m.side();
        let n = cat.n_objects();
        let field = cat.field();

        let mut gens: Vec<(usize, usize)> = Vec::new();
        for x in 0..n {
            for k in 0..m.dim_at(x) {
                gens.push((x, k));
            }
        }
        if gens.is_empty() {
            let p0 = Rep::zero(cat, side);
            let eval = RepMap::zero(&p0, m);
            let (syzygy, incl) = eval.kernel(cat);
            return Ok(ProjPresentation { p0, p0_gens: gens, eval, syzygy, incl });
        }

        let summands: Vec<Rep> = gens
            .iter()
            .map(|&(x, _)| Rep::representable(cat, x, side))
            .collect();
        let refs: Vec<&Rep> = summands.iter().collect();
        let p0 = Rep::direct_sum(cat, &refs);

        // The copy (x, k) sends the basis morphism `phi` in its value at `y`
        // to `phi` acting on the k-th basis vector of `M(x)`.
        let comps: Vec<Mat> = (0..n)
            .map(|y| {
                let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(p0.dim_at(y));
                for &(x, k) in &gens {
                    let (src, tgt) = match side {
                        Side::Left => (x, y),
                        Side::Right => (y, x),
                    };
                    for idx in 0..cat.hom_dim(src, tgt) {
                        cols.push(m.act_basis(MorId { src, tgt, idx }).col(k));
                    }
                }
                if cols.is_empty() {
                    Mat::zero(field, m.dim_at(y), 0)
                } else {
                    Mat::from_cols(field, &cols)
                }
            })
            .collect();
        let eval = RepMap::new(cat, p0.clone(), m.clone(), comps)?;
        debug_assert!(eval.is_epi(), "evaluation must be onto (identities hit every generator)");
        let (syzygy, incl) = eval.kernel(cat);
        Ok(ProjPresentation { p0, p0_gens: gens, eval, syzygy, incl })
    }
}

/// `Ext^1(M, N)` with explicit cocycle representatives (maps `syzygy -> N`
/// spanning a complement of the restrictions from `P0`).
pub struct Ext1 {
    pub dim: usize,
    pub classes: Vec<RepMap>,
}

pub fn ext1(cat: &LinCat, m: &Rep, n: &Rep) -> Result<Ext1> {
    let pres = ProjPresentation::new(cat, m)?;
    let hom_omega = hom_reps(cat, &pres.syzygy, n);
    if hom_omega.is_empty() {
        return Ok(Ext1 { dim: 0, classes: Vec::new() });
    }
    let ambient: usize = (0..cat.n_objects())
        .map(|x| n.dim_at(x) * pres.syzygy.dim_at(x))
        .sum();
    let restricted: Vec<Vec<Scalar>> = hom_reps(cat, &pres.p0, n)
        .iter()
        .map(|u| flatten_map(&u.compose(&pres.incl)))
        .collect();
    let mut image = Subspace::from_spanning(cat.field(), ambient, &restricted);
    let mut classes = Vec::new();
    for u in hom_omega {
        let flat = flatten_map(&u);
        if image.coords_of(&flat).is_none() {
            image = image.sum(&Subspace::from_spanning(cat.field(), ambient, &[flat]));
            classes.push(u);
        }
    }
    Ok(Ext1 { dim: classes.len(), classes })
}

/// Exact projectivity: does the evaluation cover split?
pub fn is_projective_rep(cat: &LinCat, m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let pres = ProjPresentation::new(cat, m)?;
    let sections = hom_reps(cat, m, &pres.p0);
    if sections.is_empty() {
        return Ok(false);
    }
    let cols: Vec<Vec<Scalar>> = sections
        .iter()
        .map(|s| flatten_map(&pres.eval.compose(s)))
        .collect();
    let lhs = Mat::from_cols(cat.field(), &cols);
    let rhs_flat = flatten_map(&RepMap::identity(m));
    let rhs = Mat::column(cat.field(), &rhs_flat);
    Ok(lhs.solve(&rhs).is_some())
}

/// Exact injectivity via duality: `M` is injective iff its k-linear dual is
/// projective on the other side.
pub fn is_injective_rep(cat: &LinCat, m: &Rep) -> Result<bool> {
    is_projective_rep(cat, &dual_rep(cat, m))
}
