//! Subspaces of `k^n` with canonical reduced-row-echelon bases.

use crate::{Field, Mat, Scalar};

/// A subspace of `k^ambient`, stored as the reduced row echelon basis of its
/// span (rows of [`Subspace::basis`]).
///
/// Because the RREF basis is canonical, two `Subspace` values are equal as
/// subspaces if and only if they are equal as values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of the given vectors.
    pub fn from_spanning(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_mat_rows(&Mat::from_rows(field, vectors))
    }

    /// The row space of a matrix.
    pub fn from_mat_rows(m: &Mat) -> Subspace {
        let r = m.rref();
        let basis = Mat::from_fn(m.field(), r.rank, m.cols(), |i, j| r.mat[(i, j)].clone());
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    /// The column space of a matrix (its image as a linear map).
    pub fn from_mat_cols(m: &Mat) -> Subspace {
        Subspace::from_mat_rows(&m.transpose())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical basis, one vector per row, in RREF.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vec(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    /// Pivot coordinates of the canonical basis (ascending).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    residual[j] = &residual[j] - &(&c * &self.basis[(i, j)]);
                }
            }
            coords.push(c);
        }
        if residual.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis_vec(i)))
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn lincomb(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vec![Scalar::zero(self.field); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                v[j] = &v[j] + &(c * &self.basis[(i, j)]);
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in sum");
        Subspace::from_mat_rows(&Mat::vstack(&[&self.basis, &other.basis]))
    }

    /// Intersection via the Zassenhaus algorithm: row-reduce
    /// `[U | U; W | 0]` and read off rows whose left half vanished.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in intersect");
        let n = self.ambient;
        let top = Mat::hstack(&[&self.basis, &self.basis]);
        let bottom = Mat::hstack(&[other.basis(), &Mat::zero(self.field, other.dim(), n)]);
        let stacked = Mat::vstack(&[&top, &bottom]);
        let r = stacked.rref().mat;
        let mut inter_rows = Vec::new();
        for i in 0..r.rows() {
            let left_zero = (0..n).all(|j| r[(i, j)].is_zero());
            let right = (n..2 * n).map(|j| r[(i, j)].clone()).collect::<Vec<_>>();
            if left_zero && right.iter().any(|s| !s.is_zero()) {
                inter_rows.push(right);
            }
        }
        Subspace::from_spanning(self.field, n, &inter_rows)
    }
}
