//! Dense exact matrices with reduced row echelon form and solving.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::{Field, Scalar};

/// A dense `rows x cols` matrix over a fixed field, stored row-major.
///
/// Vectors are columns: a matrix `m` acts on `v` by [`Mat::mul_vec`], and a
/// linear map `V -> W` between spaces of dimensions `n`, `m` is an `m x n`
/// matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// The result of [`Mat::rref`]: the reduced row echelon form, the pivot
/// columns in increasing order, and the rank.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// The result of a consistent [`Mat::solve`] call: one particular solution per
/// right-hand-side column, plus a basis of the kernel of the coefficient
/// matrix (shared by all columns).
#[derive(Clone, Debug)]
pub struct Solution {
    /// `cols x rhs_cols`; column `j` solves `self * x = rhs[:, j]`.
    pub particular: Mat,
    /// Basis vectors of `ker(self)`, one per free column, in a canonical
    /// order (free columns ascending, free coordinate set to 1).
    pub kernel: Vec<Vec<Scalar>>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one(field);
        }
        m
    }

    /// Builds a matrix from closures; handy for structure-constant assembly.
    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Mat {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged row lengths");
        Mat {
            field,
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().collect(),
        }
    }

    /// Builds the `n x 1` column matrix of a vector.
    pub fn column(field: Field, v: &[Scalar]) -> Mat {
        Mat {
            field,
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, cols: &[Vec<Scalar>]) -> Mat {
        let rows = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == rows), "ragged column lengths");
        Mat::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Mat {
        let data: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
            .collect();
        Mat::from_rows(field, &data)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let zero = Scalar::zero(self.field);
        Mat::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc = &acc + &(a * &rhs[(k, j)]);
                }
            }
            acc
        })
    }

    /// Applies the matrix to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.field);
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    if !a.is_zero() && !v[k].is_zero() {
                        acc = &acc + &(a * &v[k]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[a | b | ...]`.
    pub fn hstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows), "hstack row mismatch");
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out[(i, off + j)] = m[(i, j)].clone();
                }
            }
            off += m.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols), "vstack col mismatch");
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..m.rows {
                for j in 0..cols {
                    out[(off + i, j)] = m[(i, j)].clone();
                }
            }
            off += m.rows;
        }
        out
    }

    /// Block-diagonal assembly.
    pub fn block_diag(field: Field, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out[(ro + i, co + j)] = m[(i, j)].clone();
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Kronecker product; coordinates of `a (x) b` are ordered with the index
    /// of `a` varying slowest (`(i, j) -> i * b.dim + j`).
    pub fn kron(a: &Mat, b: &Mat) -> Mat {
        Mat::from_fn(a.field, a.rows * b.rows, a.cols * b.cols, |i, j| {
            &a[(i / b.rows, j / b.cols)] * &b[(i % b.rows, j % b.cols)]
        })
    }

    /// The reduced row echelon form, with pivot columns and rank.
    ///
    /// Deterministic: for each column the first nonzero entry from the top
    /// unprocessed row is used as the pivot.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for j in col..m.cols {
                m[(row, j)] = &m[(row, j)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        m[(r, j)] = &m[(r, j)] - &(&factor * &m[(row, j)]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            mat: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A canonical basis of `ker(self)` (one vector per free column).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let r = self.rref();
        kernel_from_rref(&r, self.cols)
    }

    /// Solves `self * x = rhs` for every column of `rhs` simultaneously.
    ///
    /// Returns `None` when some column has no solution.
    pub fn solve(&self, rhs: &Mat) -> Option<Solution> {
        assert_eq!(self.rows, rhs.rows, "rhs row mismatch in solve");
        let aug = Mat::hstack(&[self, rhs]);
        let r = aug.rref();
        // A pivot inside the augmented block certifies inconsistency.
        if r.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut particular = Mat::zero(self.field, self.cols, rhs.cols);
        for (row, &pc) in r.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                particular[(pc, j)] = r.mat[(row, self.cols + j)].clone();
            }
        }
        let kernel = {
            // Reuse the rref of the coefficient block: its pivots are exactly
            // `r.pivots` (all < self.cols), and the coefficient columns of
            // `r.mat` are the rref of `self`.
            let coeff = Mat::from_fn(self.field, self.rows, self.cols, |i, j| r.mat[(i, j)].clone());
            let cr = Rref {
                mat: coeff,
                pivots: r.pivots.clone(),
                rank: r.pivots.len(),
            };
            kernel_from_rref(&cr, self.cols)
        };
        Some(Solution { particular, kernel })
    }

    /// The inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Mat::identity(self.field, self.rows))?;
        if sol.kernel.is_empty() {
            Some(sol.particular)
        } else {
            None
        }
    }

    /// Whether the matrix is a bijection (square and full rank).
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

fn kernel_from_rref(r: &Rref, cols: usize) -> Vec<Vec<Scalar>> {
    let field = r.mat.field;
    let pivot_set: std::collections::HashSet<usize> = r.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(field); cols];
        v[free] = Scalar::one(field);
        for (row, &pc) in r.pivots.iter().enumerate() {
            v[pc] = -&r.mat[(row, free)];
        }
        basis.push(v);
    }
    basis
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
