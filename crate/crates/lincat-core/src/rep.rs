//! Representations (modules) of a finite k-linear category.
//!
//! A LEFT representation is a covariant linear functor `M: C -> Vect`: a
//! dimension per object and, per basis morphism `f: x -> y`, an action matrix
//! `M(f)` of shape `dims[y] x dims[x]`, with `M(g o f) = M(g) M(f)` after
//! bilinear extension through structure constants.  A RIGHT representation is
//! the contravariant analogue: `M(f): M(y) -> M(x)` stored as a
//! `dims[x] x dims[y]` matrix with `M(g o f) = M(f) M(g)`.
//!
//! Natural transformations are [`RepMap`]s; `hom_reps` solves the naturality
//! equations exactly and returns a deterministic basis.

use crate::error::{CatError, Result};
use crate::lincat::{HomElt, LinCat, MorId};
use scalar_linalg::{Field, Mat, Scalar, Subspace, VarSystem};
use std::collections::HashMap;

/// Which side a representation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finite-dimensional representation of a [`LinCat`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    side: Side,
    field: Field,
    dims: Vec<usize>,
    action: HashMap<MorId, Mat>,
}

impl Rep {
    /// Expected action-matrix shape for a basis morphism.
    fn shape(side: Side, dims: &[usize], m: MorId) -> (usize, usize) {
        match side {
            Side::Left => (dims[m.tgt], dims[m.src]),
            Side::Right => (dims[m.src], dims[m.tgt]),
        }
    }

    /// Builds a representation and fully verifies functoriality.
    pub fn new(
        cat: &LinCat,
        side: Side,
        dims: Vec<usize>,
        action: HashMap<MorId, Mat>,
    ) -> Result<Rep> {
        let rep = Rep::from_parts_unchecked(cat, side, dims, action)?;
        rep.validate(cat)?;
        Ok(rep)
    }

    /// Builds a representation checking only shapes, not functoriality.
    /// Intended for constructions that are functorial by design; tests
    /// re-validate samples with [`Rep::validate`].
    pub fn from_parts_unchecked(
        cat: &LinCat,
        side: Side,
        dims: Vec<usize>,
        action: HashMap<MorId, Mat>,
    ) -> Result<Rep> {
        if dims.len() != cat.n_objects() {
            return Err(CatError::DimensionMismatch(
                "dimension vector does not match object count".into(),
            ));
        }
        for m in cat.all_basis() {
            let a = action.get(&m).ok_or_else(|| {
                CatError::UnknownReference(format!(
                    "no action matrix for basis morphism '{}'",
                    cat.basis_label(m)
                ))
            })?;
            let want = Rep::shape(side, &dims, m);
            if (a.rows(), a.cols()) != want {
                return Err(CatError::DimensionMismatch(format!(
                    "action of '{}' has shape {}x{}, expected {}x{}",
                    cat.basis_label(m),
                    a.rows(),
                    a.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(Rep {
            side,
            field: cat.field(),
            dims,
            action,
        })
    }

    /// Checks that identities act as identity matrices and that the action
    /// respects composition on every composable basis pair.
    pub fn validate(&self, cat: &LinCat) -> Result<()> {
        let n = cat.n_objects();
        for x in 0..n {
            let idm = self.act_elt(&cat.identity(x));
            if idm != Mat::identity(self.field, self.dims[x]) {
                return Err(CatError::AxiomViolation {
                    law: "identity action".into(),
                    detail: format!("1_{} does not act as the identity", cat.object_name(x)),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for f in cat.basis_of(x, y) {
                        for g in cat.basis_of(y, z) {
                            let gf = cat.compose(&cat.basis_elt(g), &cat.basis_elt(f));
                            let via_constants = self.act_elt(&gf);
                            let via_matrices = match self.side {
                                Side::Left => self.act_basis(g).mul(self.act_basis(f)),
                                Side::Right => self.act_basis(f).mul(self.act_basis(g)),
                            };
                            if via_constants != via_matrices {
                                return Err(CatError::AxiomViolation {
                                    law: "functoriality".into(),
                                    detail: format!(
                                        "action of {} o {} disagrees with the matrix product",
                                        cat.basis_label(g),
                                        cat.basis_label(f)
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn act_basis(&self, m: MorId) -> &Mat {
        &self.action[&m]
    }

    /// Action of an arbitrary hom element (linear combination of basis
    /// morphisms).
    pub fn act_elt(&self, h: &HomElt) -> Mat {
        let (r, c) = Rep::shape(self.side, &self.dims, MorId { src: h.src, tgt: h.tgt, idx: 0 });
        let mut out = Mat::zero(self.field, r, c);
        for (i, coeff) in h.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let m = MorId { src: h.src, tgt: h.tgt, idx: i };
            out = out.add(&self.act_basis(m).scale(coeff));
        }
        out
    }

    /// Image of a vector at the appropriate object under a basis morphism.
    pub fn apply(&self, m: MorId, v: &[Scalar]) -> Vec<Scalar> {
        self.act_basis(m).mul_vec(v)
    }

    /// The zero representation.
    pub fn zero(cat: &LinCat, side: Side) -> Rep {
        let dims = vec![0; cat.n_objects()];
        let mut action = HashMap::new();
        for m in cat.all_basis() {
            let (r, c) = Rep::shape(side, &dims, m);
            action.insert(m, Mat::zero(cat.field(), r, c));
        }
        Rep {
            side,
            field: cat.field(),
            dims,
            action,
        }
    }

    /// Representable representation at `x`: the functor `hom(x, -)` for LEFT
    /// (value at `y` is `hom(x, y)` with post-composition action), `hom(-, x)`
    /// for RIGHT (pre-composition action).
    pub fn representable(cat: &LinCat, x: usize, side: Side) -> Rep {
        let n = cat.n_objects();
        let dims: Vec<usize> = match side {
            Side::Left => (0..n).map(|y| cat.hom_dim(x, y)).collect(),
            Side::Right => (0..n).map(|y| cat.hom_dim(y, x)).collect(),
        };
        let mut action = HashMap::new();
        for m in cat.all_basis() {
            let f = cat.basis_elt(m);
            let mat = match side {
                Side::Left => cat.post_compose_matrix(&f, x),
                Side::Right => cat.pre_compose_matrix(&f, x),
            };
            action.insert(m, mat);
        }
        Rep {
            side,
            field: cat.field(),
            dims,
            action,
        }
    }

    /// Direct sum; summand order is preserved blockwise.
    pub fn direct_sum(cat: &LinCat, parts: &[&Rep]) -> Rep {
        assert!(!parts.is_empty(), "direct sum needs at least one summand");
        let side = parts[0].side;
        assert!(
            parts.iter().all(|p| p.side == side),
            "direct sum of mixed sides"
        );
        let n = cat.n_objects();
        let dims: Vec<usize> = (0..n)
            .map(|x| parts.iter().map(|p| p.dims[x]).sum())
            .collect();
        let mut action = HashMap::new();
        for m in cat.all_basis() {
            let blocks: Vec<&Mat> = parts.iter().map(|p| p.act_basis(m)).collect();
            action.insert(m, Mat::block_diag(cat.field(), &blocks));
        }
        Rep {
            side,
            field: cat.field(),
            dims,
            action,
        }
    }

    /// Inclusion of the `i`-th summand into the direct sum of `parts`.
    pub fn summand_inclusion(cat: &LinCat, parts: &[&Rep], i: usize) -> RepMap {
        let total = Rep::direct_sum(cat, parts);
        let field = cat.field();
        let comps = (0..cat.n_objects())
            .map(|x| {
                let before: usize = parts[..i].iter().map(|p| p.dims[x]).sum();
                let mut m = Mat::zero(field, total.dims[x], parts[i].dims[x]);
                for j in 0..parts[i].dims[x] {
                    m[(before + j, j)] = Scalar::one(field);
                }
                m
            })
            .collect();
        RepMap {
            source: parts[i].clone(),
            target: total,
            comps,
        }
    }

    /// Projection of the direct sum of `parts` onto the `i`-th summand.
    pub fn summand_projection(cat: &LinCat, parts: &[&Rep], i: usize) -> RepMap {
        let total = Rep::direct_sum(cat, parts);
        let field = cat.field();
        let comps = (0..cat.n_objects())
            .map(|x| {
                let before: usize = parts[..i].iter().map(|p| p.dims[x]).sum();
                let mut m = Mat::zero(field, parts[i].dims[x], total.dims[x]);
                for j in 0..parts[i].dims[x] {
                    m[(j, before + j)] = Scalar::one(field);
                }
                m
            })
            .collect();
        RepMap {
            source: total,
            target: parts[i].clone(),
            comps,
        }
    }

    /// Views this representation over the opposite category, flipping sides.
    /// Action matrices are reused unchanged; only the bookkeeping flips.
    pub fn to_op(&self) -> Rep {
        let mut action = HashMap::new();
        for (&m, mat) in &self.action {
            action.insert(MorId { src: m.tgt, tgt: m.src, idx: m.idx }, mat.clone());
        }
        Rep {
            side: self.side.flip(),
            field: self.field,
            dims: self.dims.clone(),
            action,
        }
    }

    /// Restriction to the full subcategory on `keep` (in the order given),
    /// matching [`LinCat::full_subcat`].
    pub fn restrict(&self, keep: &[usize]) -> Rep {
        let dims: Vec<usize> = keep.iter().map(|&x| self.dims[x]).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut action = HashMap::new();
        for (&m, mat) in &self.action {
            if let (Some(&s), Some(&t)) = (pos.get(&m.src), pos.get(&m.tgt)) {
                action.insert(MorId { src: s, tgt: t, idx: m.idx }, mat.clone());
            }
        }
        Rep {
            side: self.side,
            field: self.field,
            dims,
            action,
        }
    }

    /// Smallest action-stable family of subspaces containing the given
    /// spanning vectors (the subrepresentation generated by them).
    pub fn span_closure(&self, cat: &LinCat, gens: &[Vec<Vec<Scalar>>]) -> Vec<Subspace> {
        let n = cat.n_objects();
        let mut subs: Vec<Subspace> = (0..n)
            .map(|x| Subspace::from_spanning(self.field, self.dims[x], &gens[x]))
            .collect();
        loop {
            let mut changed = false;
            for m in cat.all_basis() {
                let (from, to) = match self.side {
                    Side::Left => (m.src, m.tgt),
                    Side::Right => (m.tgt, m.src),
                };
                let mut new_vecs = Vec::new();
                for i in 0..subs[from].dim() {
                    let img = self.apply(m, subs[from].basis_vec(i));
                    if !subs[to].contains(&img) {
                        new_vecs.push(img);
                    }
                }
                if !new_vecs.is_empty() {
                    let add = Subspace::from_spanning(self.field, self.dims[to], &new_vecs);
                    subs[to] = subs[to].sum(&add);
                    changed = true;
                }
            }
            if !changed {
                return subs;
            }
        }
    }

    /// Checks that the family of subspaces is stable under the action,
    /// naming the violating basis morphism otherwise.
    pub fn check_invariant(&self, cat: &LinCat, subs: &[Subspace]) -> Result<()> {
        for m in cat.all_basis() {
            let (from, to) = match self.side {
                Side::Left => (m.src, m.tgt),
                Side::Right => (m.tgt, m.src),
            };
            for i in 0..subs[from].dim() {
                let img = self.apply(m, subs[from].basis_vec(i));
                if !subs[to].contains(&img) {
                    return Err(CatError::NotASubmodule {
                        morphism: cat.basis_label(m).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Subrepresentation on action-stable subspaces, with its inclusion.
    pub fn sub_rep(&self, cat: &LinCat, subs: &[Subspace]) -> Result<(Rep, RepMap)> {
        self.check_invariant(cat, subs)?;
        let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        let mut action = HashMap::new();
        for m in cat.all_basis() {
            let (from, to) = match self.side {
                Side::Left => (m.src, m.tgt),
                Side::Right => (m.tgt, m.src),
            };
            let cols: Vec<Vec<Scalar>> = (0..subs[from].dim())
                .map(|i| {
                    let img = self.apply(m, subs[from].basis_vec(i));
                    subs[to]
                        .coords_of(&img)
                        .expect("invariance was just checked")
                })
                .collect();
            let mat = if cols.is_empty() {
                Mat::zero(self.field, dims[to], 0)
            } else {
                Mat::from_cols(self.field, &cols)
            };
            action.insert(m, mat);
        }
        let sub = Rep {
            side: self.side,
            field: self.field,
            dims,
            action,
        };
        let comps: Vec<Mat> = subs.iter().map(|s| s.basis().transpose()).collect();
        let incl = RepMap {
            source: sub.clone(),
            target: self.clone(),
            comps,
        };
        Ok((sub, incl))
    }

    /// Quotient representation by action-stable subspaces, with its
    /// projection.
    pub fn quotient_rep(&self, cat: &LinCat, subs: &[Subspace]) -> Result<(Rep, RepMap)> {
        self.check_invariant(cat, subs)?;
        let quots: Vec<scalar_linalg::QuotientSpace> = subs
            .iter()
            .map(|s| scalar_linalg::QuotientSpace::new(s.clone()))
            .collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let mut action = HashMap::new();
        for m in cat.all_basis() {
            let (from, to) = match self.side {
                Side::Left => (m.src, m.tgt),
                Side::Right => (m.tgt, m.src),
            };
            // Induced map: lift, act, project.  Well defined because the
            // subspaces are action-stable.
            let mat = quots[to]
                .projection()
                .mul(self.act_basis(m))
                .mul(quots[from].section());
            action.insert(m, mat);
        }
        let quot = Rep {
            side: self.side,
            field: self.field,
            dims,
            action,
        };
        let comps: Vec<Mat> = quots.iter().map(|q| q.projection().clone()).collect();
        let proj = RepMap {
            source: self.clone(),
            target: quot.clone(),
            comps,
        };
        Ok((quot, proj))
    }
}

/// A natural transformation between two representations of the same side.
#[derive(Clone, Debug)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    /// One matrix per object: `comps[x]: source(x) -> target(x)`.
    pub comps: Vec<Mat>,
}

impl RepMap {
    /// Builds a map and verifies naturality against the category.
    pub fn new(cat: &LinCat, source: Rep, target: Rep, comps: Vec<Mat>) -> Result<RepMap> {
        let map = RepMap {
            source,
            target,
            comps,
        };
        map.validate(cat)?;
        Ok(map)
    }

    /// Builds a map checking shapes only.
    pub fn from_parts_unchecked(source: Rep, target: Rep, comps: Vec<Mat>) -> RepMap {
        assert_eq!(comps.len(), source.dims.len());
        for (x, c) in comps.iter().enumerate() {
            assert_eq!(
                (c.rows(), c.cols()),
                (target.dims[x], source.dims[x]),
                "component shape mismatch at object {x}"
            );
        }
        RepMap {
            source,
            target,
            comps,
        }
    }

    /// Naturality: for every basis `f: x -> y`, LEFT
    /// `comps[y] M(f) = N(f) comps[x]`; RIGHT `comps[x] M(f) = N(f) comps[y]`.
    pub fn validate(&self, cat: &LinCat) -> Result<()> {
        if self.source.side != self.target.side {
            return Err(CatError::DimensionMismatch(
                "natural transformation between different sides".into(),
            ));
        }
        for (x, c) in self.comps.iter().enumerate() {
            if (c.rows(), c.cols()) != (self.target.dims[x], self.source.dims[x]) {
                return Err(CatError::DimensionMismatch(format!(
                    "component at object {x} has wrong shape"
                )));
            }
        }
        for m in cat.all_basis() {
            let (lhs, rhs) = match self.source.side {
                Side::Left => (
                    self.comps[m.tgt].mul(self.source.act_basis(m)),
                    self.target.act_basis(m).mul(&self.comps[m.src]),
                ),
                Side::Right => (
                    self.comps[m.src].mul(self.source.act_basis(m)),
                    self.target.act_basis(m).mul(&self.comps[m.tgt]),
                ),
            };
            if lhs != rhs {
                return Err(CatError::AxiomViolation {
                    law: "naturality".into(),
                    detail: format!("fails at basis morphism '{}'", cat.basis_label(m)),
                });
            }
        }
        Ok(())
    }

    pub fn identity(rep: &Rep) -> RepMap {
        let comps = rep
            .dims
            .iter()
            .map(|&d| Mat::identity(rep.field, d))
            .collect();
        RepMap {
            source: rep.clone(),
            target: rep.clone(),
            comps,
        }
    }

    pub fn zero(source: &Rep, target: &Rep) -> RepMap {
        let comps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Mat::zero(source.field, t, s))
            .collect();
        RepMap {
            source: source.clone(),
            target: target.clone(),
            comps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// `self o other` (apply `other` first).
    pub fn compose(&self, other: &RepMap) -> RepMap {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.mul(b))
            .collect();
        RepMap {
            source: other.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn scale(&self, s: &Scalar) -> RepMap {
        let comps = self.comps.iter().map(|c| c.scale(s)).collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.rows() == c.cols() && c.is_invertible())
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    /// Inverse map; panics unless `is_iso`.
    pub fn inverse(&self) -> RepMap {
        let comps = self
            .comps
            .iter()
            .map(|c| c.inverse().expect("inverse of a non-isomorphism"))
            .collect();
        RepMap {
            source: self.target.clone(),
            target: self.source.clone(),
            comps,
        }
    }

    /// Per-object kernels (always action-stable).
    pub fn kernel_subspaces(&self) -> Vec<Subspace> {
        self.comps
            .iter()
            .map(|c| {
                Subspace::from_spanning(
                    self.source.field,
                    c.cols(),
                    &c.kernel_basis(),
                )
            })
            .collect()
    }

    /// Per-object images (always action-stable).
    pub fn image_subspaces(&self) -> Vec<Subspace> {
        self.comps.iter().map(Subspace::from_mat_cols).collect()
    }

    /// Kernel as a subrepresentation with its inclusion.
    pub fn kernel(&self, cat: &LinCat) -> (Rep, RepMap) {
        self.source
            .sub_rep(cat, &self.kernel_subspaces())
            .expect("kernels are action-stable")
    }

    /// Image as a subrepresentation of the target with its inclusion.
    pub fn image(&self, cat: &LinCat) -> (Rep, RepMap) {
        self.target
            .sub_rep(cat, &self.image_subspaces())
            .expect("images are action-stable")
    }

    /// Cokernel as a quotient of the target with its projection.
    pub fn cokernel(&self, cat: &LinCat) -> (Rep, RepMap) {
        self.target
            .quotient_rep(cat, &self.image_subspaces())
            .expect("images are action-stable")
    }
}

/// Solves the naturality equations and returns a deterministic basis of
/// `Hom(M, N)` as natural transformations.
pub fn hom_reps(cat: &LinCat, m: &Rep, n: &Rep) -> Vec<RepMap> {
    assert_eq!(m.side, n.side, "hom between representations of different sides");
    let field = cat.field();
    let nobj = cat.n_objects();
    let mut sys = VarSystem::new(field);
    let blocks: Vec<scalar_linalg::VarBlock> = (0..nobj)
        .map(|x| sys.add_block(n.dims[x] * m.dims[x]))
        .collect();
    for mor in cat.all_basis() {
        let mf = m.act_basis(mor);
        let nf = n.act_basis(mor);
        // LEFT: T_y M(f) - N(f) T_x = 0 with f: x -> y.
        // RIGHT: T_x M(f) - N(f) T_y = 0 (M(f): M(y) -> M(x)).
        let (tb_obj, ta_obj) = match m.side {
            Side::Left => (mor.tgt, mor.src),
            Side::Right => (mor.src, mor.tgt),
        };
        // Equation entries indexed by (i, j): i over n.dims[tb_obj], j over
        // m.dims[ta_obj].
        for i in 0..n.dims[tb_obj] {
            for j in 0..m.dims[ta_obj] {
                let mut coeffs: Vec<(usize, Scalar)> = Vec::new();
                for k in 0..m.dims[tb_obj] {
                    coeffs.push((
                        blocks[tb_obj].mat_slot(n.dims[tb_obj], m.dims[tb_obj], i, k),
                        mf[(k, j)].clone(),
                    ));
                }
                for l in 0..n.dims[ta_obj] {
                    coeffs.push((
                        blocks[ta_obj].mat_slot(n.dims[ta_obj], m.dims[ta_obj], l, j),
                        -&nf[(i, l)],
                    ));
                }
                sys.add_homogeneous(coeffs);
            }
        }
    }
    let sol = sys.solve().expect("homogeneous system is consistent");
    sol.kernel
        .into_iter()
        .map(|vec| {
            let comps: Vec<Mat> = (0..nobj)
                .map(|x| {
                    Mat::from_fn(field, n.dims[x], m.dims[x], |i, j| {
                        vec[blocks[x].mat_slot(n.dims[x], m.dims[x], i, j)].clone()
                    })
                })
                .collect();
            RepMap {
                source: m.clone(),
                target: n.clone(),
                comps,
            }
        })
        .collect()
}

/// Dimension of `Hom(M, N)` without materializing the basis.
pub fn dim_hom_reps(cat: &LinCat, m: &Rep, n: &Rep) -> usize {
    hom_reps(cat, m, n).len()
}
