//! Induction of a left module over the degree-lowering subcategory up to the
//! whole category: `V |-> C (x)_{C^-} V`.
//!
//! The value at `y` is the sum over `w` of `hom(w, y) (x) V(w)` modulo the
//! balancing relations `(phi o g) (x) v = phi (x) (g . v)` for `g` running
//! through the degree-lowering family; the action is post-composition on the
//! first leg.  Applied to the local degree-0 algebra concentrated at `x`
//! this recovers the standard module at `x`.

use crate::error::Result;
use lincat_core::{HomElt, LinCat, MorId, Rep, Side};
use reedy::ReedyStructure;
use scalar_linalg::{Mat, QuotientSpace, Scalar, Subspace};
use std::collections::HashMap;

/// A left module over the degree-lowering subcategory, given by its values
/// and the action of every minus-family basis vector (in the coordinates of
/// `r.minus(src, tgt)`).
pub struct MinusModule {
    pub dims: Vec<usize>,
    /// `action[(src, tgt, k)]`: the action of the `k`-th basis vector of
    /// `minus(src, tgt)`, shape `dims[tgt] x dims[src]`.
    pub action: HashMap<(usize, usize, usize), Mat>,
}

impl MinusModule {
    /// The local degree-0 algebra at `x` acting on itself, concentrated at
    /// `x`; all strictly degree-lowering morphisms act as zero (forced by
    /// the zero values below `x`).
    pub fn local_algebra_at(cat: &LinCat, r: &ReedyStructure, x: usize) -> Result<MinusModule> {
        let field = cat.field();
        let alg = r.local_algebra(cat, x)?;
        let mut dims = vec![0usize; cat.n_objects()];
        dims[x] = alg.dim();
        let mut action = HashMap::new();
        for src in 0..cat.n_objects() {
            for tgt in 0..cat.n_objects() {
                for k in 0..r.minus(src, tgt).dim() {
                    let mat = if src == x && tgt == x {
                        alg.lmul(&alg.basis_vec(k))
                    } else {
                        Mat::zero(field, dims[tgt], dims[src])
                    };
                    action.insert((src, tgt, k), mat);
                }
            }
        }
        Ok(MinusModule { dims, action })
    }
}

pub fn induce_minus(cat: &LinCat, r: &ReedyStructure, v: &MinusModule) -> Result<Rep> {
    let field = cat.field();
    let n = cat.n_objects();

    // Raw space at y: sum over w of hom(w, y) (x) V(w).
    let offsets_at = |y: usize| -> (Vec<usize>, usize) {
        let mut offs = Vec::with_capacity(n);
        let mut total = 0usize;
        for w in 0..n {
            offs.push(total);
            total += cat.hom_dim(w, y) * v.dims[w];
        }
        (offs, total)
    };

    let mut quots: Vec<QuotientSpace> = Vec::with_capacity(n);
    for y in 0..n {
        let (offs, raw) = offsets_at(y);
        let mut relations: Vec<Vec<Scalar>> = Vec::new();
        for w in 0..n {
            for wp in 0..n {
                for k in 0..r.minus(w, wp).dim() {
                    let g = HomElt {
                        src: w,
                        tgt: wp,
                        coeffs: r.minus(w, wp).basis_vec(k).to_vec(),
                    };
                    let gv = &v.action[&(w, wp, k)]; // V(w) -> V(wp)
                    for phi_idx in 0..cat.hom_dim(wp, y) {
                        let phi = cat.basis_elt(MorId { src: wp, tgt: y, idx: phi_idx });
                        let phi_g = cat.compose(&phi, &g); // in hom(w, y)
                        for vj in 0..v.dims[w] {
                            let mut rel = vec![Scalar::zero(field); raw];
                            for (t, c) in phi_g.coeffs.iter().enumerate() {
                                if !c.is_zero() {
                                    let idx = offs[w] + t * v.dims[w] + vj;
                                    rel[idx] = &rel[idx] + c;
                                }
                            }
                            for b in 0..v.dims[wp] {
                                let c = &gv[(b, vj)];
                                if !c.is_zero() {
                                    let idx = offs[wp] + phi_idx * v.dims[wp] + b;
                                    rel[idx] = &rel[idx] - c;
                                }
                            }
                            if rel.iter().any(|s| !s.is_zero()) {
                                relations.push(rel);
                            }
                        }
                    }
                }
            }
        }
        quots.push(QuotientSpace::new(Subspace::from_spanning(field, raw, &relations)));
    }

    let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
    let mut action = HashMap::new();
    for psi in cat.all_basis() {
        let (y, yp) = (psi.src, psi.tgt);
        let (offs_y, raw_y) = offsets_at(y);
        let (offs_yp, raw_yp) = offsets_at(yp);
        let psi_elt = cat.basis_elt(psi);
        let mut rawmat = Mat::zero(field, raw_yp, raw_y);
        for w in 0..n {
            // Post-composition on the first leg, identity on V(w).
            let post = cat.post_compose_matrix(&psi_elt, w); // hom(w,y) -> hom(w,yp)
            for t in 0..cat.hom_dim(w, y) {
                for s in 0..cat.hom_dim(w, yp) {
                    let c = &post[(s, t)];
                    if !c.is_zero() {
                        for vj in 0..v.dims[w] {
                            let r_idx = offs_yp[w] + s * v.dims[w] + vj;
                            let c_idx = offs_y[w] + t * v.dims[w] + vj;
                            rawmat[(r_idx, c_idx)] = &rawmat[(r_idx, c_idx)] + c;
                        }
                    }
                }
            }
        }
        let induced = quots[yp].map_into_quotient(&rawmat).mul(quots[y].section());
        action.insert(psi, induced);
    }
    let rep = Rep::from_parts_unchecked(cat, Side::Left, dims, action)?;
    rep.validate(cat)?;
    Ok(rep)
}
