//! Balanced tensor products `M (x)_A N` of a right module and a left module
//! over a finite-dimensional algebra.
//!
//! The tensor product is computed as the quotient of `M (x)_k N` by the span
//! of the balancing relations `(m . a) (x) n - m (x) (a . n)` over all basis
//! elements.  Pure tensors of coordinate vectors are available, together with
//! projection to and lifting from the quotient.

use crate::algebra::{AlgMod, Algebra};
use crate::error::{CatError, Result};
use crate::rep::Side;
use scalar_linalg::{Field, QuotientSpace, Scalar, Subspace};

/// The balanced tensor product of a right module and a left module.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    field: Field,
    m_dim: usize,
    n_dim: usize,
    quot: QuotientSpace,
}

/// Computes `m (x)_A n` for a right `A`-module `m` and a left `A`-module `n`.
pub fn balanced_tensor(alg: &Algebra, m: &AlgMod, n: &AlgMod) -> Result<BalancedTensor> {
    if m.side() != Side::Right {
        return Err(CatError::DimensionMismatch(
            "balanced tensor requires a right module on the left of (x)".into(),
        ));
    }
    if n.side() != Side::Left {
        return Err(CatError::DimensionMismatch(
            "balanced tensor requires a left module on the right of (x)".into(),
        ));
    }
    let field = alg.field();
    let (md, nd) = (m.dim(), n.dim());
    let ambient = md * nd;
    let mut relations: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..alg.dim() {
        let ma = m.action_of_basis(a); // md x md, columns = images of basis
        let na = n.action_of_basis(a); // nd x nd
        for i in 0..md {
            for j in 0..nd {
                // (v_i . e_a) (x) w_j - v_i (x) (e_a . w_j)
                let mut rel = vec![Scalar::zero(field); ambient];
                for r in 0..md {
                    let c = &ma[(r, i)];
                    if !c.is_zero() {
                        rel[r * nd + j] = &rel[r * nd + j] + c;
                    }
                }
                for s in 0..nd {
                    let c = &na[(s, j)];
                    if !c.is_zero() {
                        rel[i * nd + s] = &rel[i * nd + s] - c;
                    }
                }
                if rel.iter().any(|c| !c.is_zero()) {
                    relations.push(rel);
                }
            }
        }
    }
    let sub = Subspace::from_spanning(field, ambient, &relations);
    Ok(BalancedTensor {
        field,
        m_dim: md,
        n_dim: nd,
        quot: QuotientSpace::new(sub),
    })
}

impl BalancedTensor {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn n_dim(&self) -> usize {
        self.n_dim
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quot
    }

    /// Coordinate index of the uncollapsed pure basis tensor `v_i (x) w_j`.
    pub fn raw_index(&self, i: usize, j: usize) -> usize {
        assert!(i < self.m_dim && j < self.n_dim);
        i * self.n_dim + j
    }

    /// The class of a pure tensor of coordinate vectors.
    pub fn pure(&self, vm: &[Scalar], wn: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(vm.len(), self.m_dim);
        assert_eq!(wn.len(), self.n_dim);
        let mut raw = vec![Scalar::zero(self.field); self.m_dim * self.n_dim];
        for (i, a) in vm.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in wn.iter().enumerate() {
                if !b.is_zero() {
                    raw[i * self.n_dim + j] = a * b;
                }
            }
        }
        self.quot.project(&raw)
    }

    /// Projects a raw `m_dim * n_dim` coordinate vector to the quotient.
    pub fn project(&self, raw: &[Scalar]) -> Vec<Scalar> {
        self.quot.project(raw)
    }

    /// Lifts a quotient class to a raw representative.
    pub fn lift(&self, class: &[Scalar]) -> Vec<Scalar> {
        self.quot.lift(class)
    }
}
