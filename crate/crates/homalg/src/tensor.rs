//! The functor tensor product `M (x)_C N` of a right module `M` and a left
//! module `N` over a linear category, and the first derived functor `Tor_1`.
//!
//! The tensor is the sum of the valuewise tensors `M(x) (x) N(x)` modulo the
//! bimodule relations `(m . f) (x) n = m (x) (f . n)` over all basis
//! morphisms `f`.

use crate::error::Result;
use crate::present::ProjPresentation;
use lincat_core::{LinCat, Rep, Side};
use scalar_linalg::{Mat, QuotientSpace, Scalar, Subspace};

/// `M (x)_C N` with access to the raw-coordinate quotient.
pub struct RepTensor {
    /// Offset of the block `M(x) (x) N(x)` in raw coordinates.
    pub offsets: Vec<usize>,
    pub raw_dim: usize,
    pub quot: QuotientSpace,
}

impl RepTensor {
    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    /// Raw coordinate of the pure tensor `m_i (x) n_j` in the block at `x`.
    pub fn raw_index(&self, n: &Rep, x: usize, i: usize, j: usize) -> usize {
        self.offsets[x] + i * n.dim_at(x) + j
    }
}

pub fn rep_tensor(cat: &LinCat, m: &Rep, n: &Rep) -> Result<RepTensor> {
    assert_eq!(m.side(), Side::Right, "left factor must be a right module");
    assert_eq!(n.side(), Side::Left, "right factor must be a left module");
    let field = cat.field();
    let nobj = cat.n_objects();
    let mut offsets = Vec::with_capacity(nobj);
    let mut raw_dim = 0usize;
    for x in 0..nobj {
        offsets.push(raw_dim);
        raw_dim += m.dim_at(x) * n.dim_at(x);
    }

    let mut relations: Vec<Vec<Scalar>> = Vec::new();
    for f in cat.all_basis() {
        let (x, y) = (f.src, f.tgt);
        // (m_i . f) (x) n_j  -  m_i (x) (f . n_j)  for m_i in M(y), n_j in N(x).
        let mf = m.act_basis(f); // M(y) -> M(x), shape (M(x), M(y))
        let nf = n.act_basis(f); // N(x) -> N(y), shape (N(y), N(x))
        for i in 0..m.dim_at(y) {
            for j in 0..n.dim_at(x) {
                let mut rel = vec![Scalar::zero(field); raw_dim];
                for a in 0..m.dim_at(x) {
                    let c = &mf[(a, i)];
                    if !c.is_zero() {
                        let idx = offsets[x] + a * n.dim_at(x) + j;
                        rel[idx] = &rel[idx] + c;
                    }
                }
                for b in 0..n.dim_at(y) {
                    let c = &nf[(b, j)];
                    if !c.is_zero() {
                        let idx = offsets[y] + i * n.dim_at(y) + b;
                        rel[idx] = &rel[idx] - c;
                    }
                }
                if rel.iter().any(|s| !s.is_zero()) {
                    relations.push(rel);
                }
            }
        }
    }
    let quot = QuotientSpace::new(Subspace::from_spanning(field, raw_dim, &relations));
    Ok(RepTensor { offsets, raw_dim, quot })
}

/// The raw-coordinate block-diagonal matrix of `id_M (x) t` for a family
/// `t[x]: A(x) -> B(x)` (used to push maps of left modules through the
/// tensor construction).
fn raw_tensor_map(cat: &LinCat, m: &Rep, comps: &[Mat]) -> Mat {
    let field = cat.field();
    let blocks: Vec<Mat> = (0..cat.n_objects())
        .map(|x| Mat::kron(&Mat::identity(field, m.dim_at(x)), &comps[x]))
        .collect();
    let refs: Vec<&Mat> = blocks.iter().collect();
    Mat::block_diag(field, &refs)
}

/// `dim Tor_1(M, N)`: the kernel of `M (x) syzygy(N) -> M (x) P0` for a
/// presentation of `N` by (flat) representables.
pub fn tor1(cat: &LinCat, m: &Rep, n: &Rep) -> Result<usize> {
    let pres = ProjPresentation::new(cat, n)?;
    let t_omega = rep_tensor(cat, m, &pres.syzygy)?;
    if t_omega.dim() == 0 {
        return Ok(0);
    }
    let t_p0 = rep_tensor(cat, m, &pres.p0)?;
    let raw = raw_tensor_map(cat, m, &pres.incl.comps);
    let induced = t_p0
        .quot
        .map_into_quotient(&raw)
        .mul(t_omega.quot.section());
    Ok(t_omega.dim() - induced.rank())
}
