//! The two-sided ideals of morphisms factoring through objects of low
//! degree, and their slices used to define standard modules.

use crate::error::Result;
use crate::structure::ReedyStructure;
use lincat_core::{CatError, HomElt, LinCat};
use scalar_linalg::{Scalar, Subspace};

/// A two-sided ideal: one subspace of every hom space, stable under pre- and
/// post-composition.
#[derive(Clone, Debug)]
pub struct Ideal {
    pub alpha: u32,
    spaces: Vec<Vec<Subspace>>,
}

impl Ideal {
    pub fn space(&self, x: usize, y: usize) -> &Subspace {
        &self.spaces[x][y]
    }

    /// The row `(x, -)`: subspaces of `hom(x, y)` for all `y`; this is a
    /// subfunctor of the left representable at `x`.
    pub fn left_slice(&self, x: usize) -> Vec<Subspace> {
        self.spaces[x].clone()
    }

    /// The column `(-, y)`: subspaces of `hom(w, y)` for all `w`; this is a
    /// subfunctor of the right representable at `y`.
    pub fn right_slice(&self, y: usize) -> Vec<Subspace> {
        self.spaces.iter().map(|row| row[y].clone()).collect()
    }

    /// Verifies two-sided stability under all basis morphisms.
    pub fn verify_two_sided(&self, cat: &LinCat) -> Result<()> {
        let n = cat.n_objects();
        for x in 0..n {
            for y in 0..n {
                let sub = &self.spaces[x][y];
                for b in 0..sub.dim() {
                    let f = HomElt { src: x, tgt: y, coeffs: sub.basis_vec(b).to_vec() };
                    // Post-composition: g in hom(y, v).
                    for v in 0..n {
                        for g in cat.basis_of(y, v) {
                            let comp = cat.compose(&cat.basis_elt(g), &f);
                            if !self.spaces[x][v].contains(&comp.coeffs) {
                                return Err(CatError::NotAnIdeal(format!(
                                    "post-composition by '{}' leaves the ideal at ({}, {})",
                                    cat.basis_label(g),
                                    cat.object_name(x),
                                    cat.object_name(y)
                                ))
                                .into());
                            }
                        }
                    }
                    // Pre-composition: h in hom(u, x).
                    for u in 0..n {
                        for h in cat.basis_of(u, x) {
                            let comp = cat.compose(&f, &cat.basis_elt(h));
                            if !self.spaces[u][y].contains(&comp.coeffs) {
                                return Err(CatError::NotAnIdeal(format!(
                                    "pre-composition by '{}' leaves the ideal at ({}, {})",
                                    cat.basis_label(h),
                                    cat.object_name(x),
                                    cat.object_name(y)
                                ))
                                .into());
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The ideal of morphisms factoring through objects of degree below `alpha`:
/// at `(x, y)`, the span of all composites `g ∘ h` with `h` degree-lowering
/// into some `z` of degree < `alpha` and `g` degree-raising out of `z`.
/// Two-sided stability is verified before returning.
pub fn ideal_i(cat: &LinCat, r: &ReedyStructure, alpha: u32) -> Result<Ideal> {
    let ideal = ideal_i_unverified(cat, r, alpha);
    ideal.verify_two_sided(cat)?;
    Ok(ideal)
}

pub(crate) fn ideal_i_unverified(cat: &LinCat, r: &ReedyStructure, alpha: u32) -> Ideal {
    let n = cat.n_objects();
    let field = cat.field();
    let mut spaces = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let mut vectors: Vec<Vec<Scalar>> = Vec::new();
            for z in 0..n {
                if r.degree(z) >= alpha {
                    continue;
                }
                let p = r.plus(z, y);
                let m = r.minus(x, z);
                for i in 0..p.dim() {
                    for j in 0..m.dim() {
                        let g = HomElt { src: z, tgt: y, coeffs: p.basis_vec(i).to_vec() };
                        let h = HomElt { src: x, tgt: z, coeffs: m.basis_vec(j).to_vec() };
                        vectors.push(cat.compose(&g, &h).coeffs);
                    }
                }
            }
            row.push(Subspace::from_spanning(field, cat.hom_dim(x, y), &vectors));
        }
        spaces.push(row);
    }
    Ideal { alpha, spaces }
}

/// The slice `(x, -)` of the ideal at `alpha = degree(x)`, i.e. the kernel
/// of the projection from the left representable at `x` onto the standard
/// module.
pub fn ideal_i_x(cat: &LinCat, r: &ReedyStructure, x: usize) -> Result<Vec<Subspace>> {
    Ok(ideal_i(cat, r, r.degree(x))?.left_slice(x))
}
