//! The composition map ρ from the two-sided factorization blocks into a hom
//! space, and Reedy factorization through its inverse.

use crate::error::{ReedyError, Result};
use crate::structure::ReedyStructure;
use lincat_core::{balanced_tensor, BalancedTensor, HomElt, LinCat};
use scalar_linalg::{Mat, Scalar};

/// One direct summand `plus(z, y) (x)_{A_z0} minus(x, z)` of the domain of ρ.
#[derive(Clone, Debug)]
pub struct RhoBlock {
    pub z: usize,
    pub offset: usize,
    pub dim: usize,
    /// Present whenever both tensor factors are nonzero.
    pub tensor: Option<BalancedTensor>,
}

/// The composition map at a pair `(x, y)`: a matrix from the ordered direct
/// sum of the z-blocks into `hom(x, y)`.
#[derive(Clone, Debug)]
pub struct RhoMap {
    pub x: usize,
    pub y: usize,
    pub mat: Mat,
    pub blocks: Vec<RhoBlock>,
}

impl RhoMap {
    pub fn domain_dim(&self) -> usize {
        self.mat.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_dim() == self.codomain_dim() && self.mat.rank() == self.codomain_dim()
    }
}

/// One z-component of a Reedy factorization: a class in the balanced tensor
/// block together with an expansion into composable pairs, so that
/// `f = Σ_z Σ_i coeff_i · (g_i ∘ h_i)` with `g_i` in `plus(z, y)` and `h_i`
/// in `minus(x, z)`.
#[derive(Clone, Debug)]
pub struct FactorTerm {
    pub z: usize,
    /// Coordinates in the balanced tensor block for `z`.
    pub class: Vec<Scalar>,
    /// Expansion `(coefficient, g, h)` of a representative of the class.
    pub pairs: Vec<(Scalar, HomElt, HomElt)>,
}

/// Assembles ρ at `(x, y)`.  The z-blocks are ordered by increasing
/// (degree, object-id); within a block, coordinates are the balanced-tensor
/// quotient classes of the lexicographic pure basis tensors.
pub fn rho_map(cat: &LinCat, r: &ReedyStructure, x: usize, y: usize) -> Result<RhoMap> {
    let field = cat.field();
    let hom_dim = cat.hom_dim(x, y);
    let mut blocks = Vec::new();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut offset = 0usize;
    for z in r.objects_by_degree() {
        let p = r.plus(z, y);
        let m = r.minus(x, z);
        if p.dim() == 0 || m.dim() == 0 {
            blocks.push(RhoBlock { z, offset, dim: 0, tensor: None });
            continue;
        }
        let alg = r.local_algebra(cat, z)?;
        let pm = r.plus_right_module(cat, z, y)?;
        let mm = r.minus_left_module(cat, x, z)?;
        let tensor = balanced_tensor(&alg, &pm, &mm)?;
        let dim = tensor.dim();
        // Image of each quotient-basis class: lift to a raw Σ c_ij g_i⊗h_j
        // and compose in the ambient category.
        for t in 0..dim {
            let mut class = vec![Scalar::zero(field); dim];
            class[t] = Scalar::one(field);
            let raw = tensor.lift(&class);
            let mut img = vec![Scalar::zero(field); hom_dim];
            for i in 0..p.dim() {
                for j in 0..m.dim() {
                    let c = &raw[tensor.raw_index(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    let g = HomElt { src: z, tgt: y, coeffs: p.basis_vec(i).to_vec() };
                    let h = HomElt { src: x, tgt: z, coeffs: m.basis_vec(j).to_vec() };
                    let comp = cat.compose(&g, &h);
                    for (acc, v) in img.iter_mut().zip(&comp.coeffs) {
                        *acc = &*acc + &(v * c);
                    }
                }
            }
            cols.push(img);
        }
        blocks.push(RhoBlock { z, offset, dim, tensor: Some(tensor) });
        offset += dim;
    }
    let mat = if cols.is_empty() {
        Mat::zero(field, hom_dim, 0)
    } else {
        Mat::from_cols(field, &cols)
    };
    Ok(RhoMap { x, y, mat, blocks })
}

/// Factorizes a morphism through ρ⁻¹: the unique per-z decomposition into
/// degree-lowering-then-degree-raising components.
pub fn reedy_factorize(
    cat: &LinCat,
    r: &ReedyStructure,
    f: &HomElt,
) -> Result<Vec<FactorTerm>> {
    let rho = rho_map(cat, r, f.src, f.tgt)?;
    factorize_with(cat, r, &rho, f)
}

/// Same as [`reedy_factorize`] but reusing a precomputed ρ.
pub fn factorize_with(
    cat: &LinCat,
    r: &ReedyStructure,
    rho: &RhoMap,
    f: &HomElt,
) -> Result<Vec<FactorTerm>> {
    let (x, y) = (rho.x, rho.y);
    assert_eq!((f.src, f.tgt), (x, y), "morphism does not match the rho pair");
    if !rho.is_bijective() {
        return Err(ReedyError::RhoNotIso {
            x: cat.object_name(x).to_string(),
            y: cat.object_name(y).to_string(),
            domain: rho.domain_dim(),
            codomain: rho.codomain_dim(),
            rank: rho.mat.rank(),
        });
    }
    let rhs = Mat::column(cat.field(), &f.coeffs);
    let sol = rho.mat.solve(&rhs).expect("bijective rho must solve");
    let coords: Vec<Scalar> = (0..rho.domain_dim()).map(|i| sol.particular[(i, 0)].clone()).collect();
    let mut terms = Vec::new();
    for b in &rho.blocks {
        if b.dim == 0 {
            continue;
        }
        let class = coords[b.offset..b.offset + b.dim].to_vec();
        if class.iter().all(|c| c.is_zero()) {
            continue;
        }
        let tensor = b.tensor.as_ref().expect("nonzero block has a tensor");
        let raw = tensor.lift(&class);
        let p = r.plus(b.z, y);
        let m = r.minus(x, b.z);
        let mut pairs = Vec::new();
        for i in 0..p.dim() {
            for j in 0..m.dim() {
                let c = raw[tensor.raw_index(i, j)].clone();
                if c.is_zero() {
                    continue;
                }
                let g = HomElt { src: b.z, tgt: y, coeffs: p.basis_vec(i).to_vec() };
                let h = HomElt { src: x, tgt: b.z, coeffs: m.basis_vec(j).to_vec() };
                pairs.push((c, g, h));
            }
        }
        terms.push(FactorTerm { z: b.z, class, pairs });
    }
    Ok(terms)
}

/// Recomposes a factorization; used to verify round trips.
pub fn compose_factorization(
    cat: &LinCat,
    x: usize,
    y: usize,
    terms: &[FactorTerm],
) -> HomElt {
    let mut out = cat.zero_elt(x, y);
    for t in terms {
        for (c, g, h) in &t.pairs {
            out = out.add(&cat.compose(g, h).scale(c));
        }
    }
    out
}
