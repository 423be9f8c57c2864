//! Incremental builder for sparse linear systems in many named unknowns.
//!
//! Used wherever a computation reduces to "find all matrices/elements
//! satisfying these linear constraints": natural transformation spaces,
//! idempotent searches, splittings of surjections, mediating morphisms.

use crate::{Field, Mat, Scalar};

/// A contiguous block of unknowns allocated from a [`VarSystem`].
#[derive(Clone, Copy, Debug)]
pub struct VarBlock {
    pub offset: usize,
    pub len: usize,
}

impl VarBlock {
    /// Global index of the `i`-th unknown of this block.
    pub fn slot(&self, i: usize) -> usize {
        assert!(i < self.len, "block index out of range");
        self.offset + i
    }

    /// Global index for a block viewed as a `rows x cols` matrix unknown
    /// (row-major).
    pub fn mat_slot(&self, rows: usize, cols: usize, i: usize, j: usize) -> usize {
        assert_eq!(rows * cols, self.len, "block shape mismatch");
        assert!(i < rows && j < cols, "matrix index out of range");
        self.offset + i * cols + j
    }
}

/// The solution set of a [`VarSystem`]: one particular solution plus a basis
/// of the homogeneous solution space.
#[derive(Clone, Debug)]
pub struct SysSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl SysSolution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// A linear system `A x = b` assembled row by row with sparse coefficients.
pub struct VarSystem {
    field: Field,
    n_vars: usize,
    rows: Vec<(Vec<(usize, Scalar)>, Scalar)>,
}

impl VarSystem {
    pub fn new(field: Field) -> VarSystem {
        VarSystem {
            field,
            n_vars: 0,
            rows: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_eqs(&self) -> usize {
        self.rows.len()
    }

    /// Allocates `len` fresh unknowns.
    pub fn add_block(&mut self, len: usize) -> VarBlock {
        let block = VarBlock {
            offset: self.n_vars,
            len,
        };
        self.n_vars += len;
        block
    }

    /// Adds the constraint `sum coeffs[i].1 * x_{coeffs[i].0} = rhs`.
    /// Repeated variable indices are accumulated.
    pub fn add_eq(&mut self, coeffs: Vec<(usize, Scalar)>, rhs: Scalar) {
        self.rows.push((coeffs, rhs));
    }

    /// Homogeneous convenience form of [`VarSystem::add_eq`].
    pub fn add_homogeneous(&mut self, coeffs: Vec<(usize, Scalar)>) {
        let z = Scalar::zero(self.field);
        self.add_eq(coeffs, z);
    }

    /// Solves the system; `None` means inconsistent.
    pub fn solve(&self) -> Option<SysSolution> {
        let mut a = Mat::zero(self.field, self.rows.len(), self.n_vars);
        let mut b = Mat::zero(self.field, self.rows.len(), 1);
        for (r, (coeffs, rhs)) in self.rows.iter().enumerate() {
            for (idx, c) in coeffs {
                assert!(*idx < self.n_vars, "unknown index out of range");
                a[(r, *idx)] = &a[(r, *idx)] + c;
            }
            b[(r, 0)] = rhs.clone();
        }
        let sol = a.solve(&b)?;
        Some(SysSolution {
            particular: sol.particular.col(0),
            kernel: sol.kernel,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_blocks_and_coupling_constraint() {
        let f = Field::Rational;
        let mut sys = VarSystem::new(f);
        let x = sys.add_block(2);
        let y = sys.add_block(1);
        // x0 + x1 = 3, x1 - y0 = 0, x0 = 1.
        sys.add_eq(vec![(x.slot(0), f.one()), (x.slot(1), f.one())], f.from_i64(3));
        sys.add_eq(vec![(x.slot(1), f.one()), (y.slot(0), -&f.one())], f.zero());
        sys.add_eq(vec![(x.slot(0), f.one())], f.one());
        let sol = sys.solve().expect("consistent");
        assert!(sol.is_unique());
        assert_eq!(
            sol.particular,
            vec![f.one(), f.from_i64(2), f.from_i64(2)]
        );
    }

    #[test]
    fn inconsistent_system_reports_none() {
        let f = Field::Fp(3);
        let mut sys = VarSystem::new(f);
        let x = sys.add_block(1);
        sys.add_eq(vec![(x.slot(0), f.one())], f.one());
        sys.add_eq(vec![(x.slot(0), f.one())], f.from_i64(2));
        assert!(sys.solve().is_none());
    }

    #[test]
    fn accumulates_repeated_indices() {
        let f = Field::Rational;
        let mut sys = VarSystem::new(f);
        let x = sys.add_block(1);
        // x + x = 4  =>  x = 2.
        sys.add_eq(
            vec![(x.slot(0), f.one()), (x.slot(0), f.one())],
            f.from_i64(4),
        );
        let sol = sys.solve().unwrap();
        assert_eq!(sol.particular, vec![f.from_i64(2)]);
    }
}
