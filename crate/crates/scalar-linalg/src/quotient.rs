//! Quotients `k^n / U` with explicit projection and section matrices.

use crate::{Field, Mat, Scalar, Subspace};

/// The quotient of `k^ambient` by a subspace, with a chosen coordinate system.
///
/// The quotient coordinates are the non-pivot coordinates of the subspace's
/// canonical basis, so the [`QuotientSpace::section`] simply re-embeds those
/// coordinates and `projection . section = id` holds exactly. The kernel of
/// the projection is exactly the subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    sub: Subspace,
    free: Vec<usize>,
    projection: Mat,
    section: Mat,
}

impl QuotientSpace {
    pub fn new(sub: Subspace) -> QuotientSpace {
        let field = sub.field();
        let n = sub.ambient();
        let pivot_set: std::collections::HashSet<usize> = sub.pivots().iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|j| !pivot_set.contains(j)).collect();
        let q = free.len();

        // projection row for free coordinate f: e_f - sum_i basis_i[f] * e_{p_i},
        // i.e. first reduce v modulo the subspace (clearing pivot coordinates),
        // then read off coordinate f.
        let mut projection = Mat::zero(field, q, n);
        for (r, &f) in free.iter().enumerate() {
            projection[(r, f)] = Scalar::one(field);
            for (i, &p) in sub.pivots().iter().enumerate() {
                projection[(r, p)] = -&sub.basis()[(i, f)];
            }
        }
        let mut section = Mat::zero(field, n, q);
        for (c, &f) in free.iter().enumerate() {
            section[(f, c)] = Scalar::one(field);
        }
        QuotientSpace {
            sub,
            free,
            projection,
            section,
        }
    }

    pub fn field(&self) -> Field {
        self.sub.field()
    }

    pub fn ambient(&self) -> usize {
        self.sub.ambient()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// The `dim x ambient` projection matrix.
    pub fn projection(&self) -> &Mat {
        &self.projection
    }

    /// The `ambient x dim` section matrix; `projection * section = id`.
    pub fn section(&self) -> &Mat {
        &self.section
    }

    /// The class of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    /// The canonical ambient representative of a quotient vector.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(q)
    }

    /// Transports a linear map `t: k^ambient -> k^m` that kills the subspace
    /// down to the quotient (`m x dim` matrix).
    pub fn map_from_quotient(&self, t: &Mat) -> Mat {
        t.mul(&self.section)
    }

    /// Transports a linear map `t: k^m -> k^ambient` to a map into the
    /// quotient (`dim x m` matrix).
    pub fn map_into_quotient(&self, t: &Mat) -> Mat {
        self.projection.mul(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn quotient_by_diagonal_line() {
        let sub = Subspace::from_spanning(q(), 2, &[vec![q().from_i64(1), q().from_i64(1)]]);
        let quot = QuotientSpace::new(sub);
        assert_eq!(quot.dim(), 1);
        assert!(
            quot.project(&[q().from_i64(1), q().from_i64(1)])
                .iter()
                .all(Scalar::is_zero),
            "the line itself must map to zero"
        );
        assert_eq!(
            quot.projection().mul(quot.section()),
            Mat::identity(q(), 1),
            "projection . section = id"
        );
    }

    #[test]
    fn quotient_of_q3_by_difference_vector() {
        // Q^3 / span(e1 - e2) has dimension 2 and e1, e2 become equal.
        let sub = Subspace::from_spanning(
            q(),
            3,
            &[vec![q().from_i64(1), q().from_i64(-1), q().from_i64(0)]],
        );
        let quot = QuotientSpace::new(sub);
        assert_eq!(quot.dim(), 2);
        let e1 = [q().from_i64(1), q().from_i64(0), q().from_i64(0)];
        let e2 = [q().from_i64(0), q().from_i64(1), q().from_i64(0)];
        assert_eq!(quot.project(&e1), quot.project(&e2));
    }
}
