//! The Reedy structure on a finite k-linear category: a degree function and
//! the degree-raising/-lowering wide subcategories, stored as one subspace of
//! each hom space.

use crate::error::Result;
use lincat_core::{AlgMod, Algebra, CatError, HomElt, LinCat, MorId, Side};
use scalar_linalg::{Mat, Subspace};

/// Degree function plus the degree-raising (`plus`) and degree-lowering
/// (`minus`) subspace families.  Axioms are checked by
/// [`crate::check_reedy`], not at construction.
#[derive(Clone, Debug)]
pub struct ReedyStructure {
    degree: Vec<u32>,
    plus: Vec<Vec<Subspace>>,
    minus: Vec<Vec<Subspace>>,
}

impl ReedyStructure {
    pub fn new(
        cat: &LinCat,
        degree: Vec<u32>,
        plus: Vec<Vec<Subspace>>,
        minus: Vec<Vec<Subspace>>,
    ) -> Result<ReedyStructure> {
        let n = cat.n_objects();
        if degree.len() != n || plus.len() != n || minus.len() != n {
            return Err(CatError::DimensionMismatch(
                "degree/plus/minus tables must have one entry per object".into(),
            )
            .into());
        }
        for x in 0..n {
            if plus[x].len() != n || minus[x].len() != n {
                return Err(CatError::DimensionMismatch(
                    "plus/minus tables must be square in the objects".into(),
                )
                .into());
            }
            for y in 0..n {
                if plus[x][y].ambient() != cat.hom_dim(x, y)
                    || minus[x][y].ambient() != cat.hom_dim(x, y)
                {
                    return Err(CatError::DimensionMismatch(format!(
                        "plus/minus subspace at ({}, {}) does not live in hom of dimension {}",
                        cat.object_name(x),
                        cat.object_name(y),
                        cat.hom_dim(x, y)
                    ))
                    .into());
                }
            }
        }
        Ok(ReedyStructure { degree, plus, minus })
    }

    /// Builds the structure from predicates selecting basis morphisms; the
    /// subspaces are spanned by the selected basis vectors.
    pub fn from_basis_morphisms(
        cat: &LinCat,
        degree: Vec<u32>,
        in_plus: impl Fn(MorId) -> bool,
        in_minus: impl Fn(MorId) -> bool,
    ) -> Result<ReedyStructure> {
        let n = cat.n_objects();
        let field = cat.field();
        let mut plus = Vec::with_capacity(n);
        let mut minus = Vec::with_capacity(n);
        for x in 0..n {
            let mut prow = Vec::with_capacity(n);
            let mut mrow = Vec::with_capacity(n);
            for y in 0..n {
                let dim = cat.hom_dim(x, y);
                let mut pvecs = Vec::new();
                let mut mvecs = Vec::new();
                for m in cat.basis_of(x, y) {
                    let v = cat.basis_elt(m).coeffs;
                    if in_plus(m) {
                        pvecs.push(v.clone());
                    }
                    if in_minus(m) {
                        mvecs.push(v);
                    }
                }
                prow.push(Subspace::from_spanning(field, dim, &pvecs));
                mrow.push(Subspace::from_spanning(field, dim, &mvecs));
            }
            plus.push(prow);
            minus.push(mrow);
        }
        ReedyStructure::new(cat, degree, plus, minus)
    }

    pub fn n_objects(&self) -> usize {
        self.degree.len()
    }

    pub fn degree(&self, x: usize) -> u32 {
        self.degree[x]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degree
    }

    pub fn max_degree(&self) -> u32 {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn plus(&self, x: usize, y: usize) -> &Subspace {
        &self.plus[x][y]
    }

    pub fn minus(&self, x: usize, y: usize) -> &Subspace {
        &self.minus[x][y]
    }

    /// Objects listed in increasing (degree, object-id) order; this is the
    /// block order used by the composition map ρ.
    pub fn objects_by_degree(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.degree.len()).collect();
        order.sort_by_key(|&z| (self.degree[z], z));
        order
    }

    /// The local degree-0 algebra `A_x0 = plus(x, x) = minus(x, x)` as an
    /// abstract algebra on the subspace basis.
    pub fn local_algebra(&self, cat: &LinCat, x: usize) -> Result<Algebra> {
        Ok(Algebra::from_hom_subspace(
            cat,
            x,
            &self.plus[x][x],
            &cat.identity(x),
        )?)
    }

    /// `minus(x, z)` as a left module over `A_z0` (action by
    /// post-composition).
    pub fn minus_left_module(&self, cat: &LinCat, x: usize, z: usize) -> Result<AlgMod> {
        let alg = self.local_algebra(cat, z)?;
        let sub = &self.minus[x][z];
        let action = self.subspace_action(cat, &alg, sub, x, z, Side::Left)?;
        Ok(AlgMod::from_parts_unchecked(&alg, Side::Left, sub.dim(), action))
    }

    /// `plus(z, y)` as a right module over `A_z0` (action by
    /// pre-composition).
    pub fn plus_right_module(&self, cat: &LinCat, z: usize, y: usize) -> Result<AlgMod> {
        let alg = self.local_algebra(cat, z)?;
        let sub = &self.plus[z][y];
        let action = self.subspace_action(cat, &alg, sub, z, y, Side::Right)?;
        Ok(AlgMod::from_parts_unchecked(&alg, Side::Right, sub.dim(), action))
    }

    /// Action matrices of the local algebra basis on a hom subspace.  For
    /// `Side::Left` the algebra sits at the target and acts by
    /// post-composition; for `Side::Right` it sits at the source and acts by
    /// pre-composition.
    fn subspace_action(
        &self,
        cat: &LinCat,
        alg: &Algebra,
        sub: &Subspace,
        src: usize,
        tgt: usize,
        side: Side,
    ) -> Result<Vec<Mat>> {
        let field = cat.field();
        let local = match side {
            Side::Left => tgt,
            Side::Right => src,
        };
        let local_sub = &self.plus[local][local];
        let mut out = Vec::with_capacity(alg.dim());
        for a in 0..alg.dim() {
            let a_elt = HomElt {
                src: local,
                tgt: local,
                coeffs: local_sub.lincomb(&alg.basis_vec(a)),
            };
            let mut cols = Vec::with_capacity(sub.dim());
            for b in 0..sub.dim() {
                let h = HomElt {
                    src,
                    tgt,
                    coeffs: sub.basis_vec(b).to_vec(),
                };
                let img = match side {
                    Side::Left => cat.compose(&a_elt, &h),
                    Side::Right => cat.compose(&h, &a_elt),
                };
                let coords = sub.coords_of(&img.coeffs).ok_or_else(|| {
                    CatError::CompositionNotClosed {
                        g: format!("local basis {a} at {}", cat.object_name(local)),
                        f: format!("subspace basis {b} of ({src}, {tgt})"),
                        detail: "composite leaves the designated subspace".into(),
                    }
                })?;
                cols.push(coords);
            }
            out.push(if cols.is_empty() {
                Mat::zero(field, 0, 0)
            } else {
                Mat::from_cols(field, &cols)
            });
        }
        Ok(out)
    }

    /// The wide subcategory spanned by `plus` as a linear category, with the
    /// per-pair inclusion matrices into the ambient hom spaces.
    pub fn plus_cat(&self, cat: &LinCat) -> Result<(LinCat, Vec<Vec<Mat>>)> {
        subcategory_lincat(cat, &self.plus, "p")
    }

    /// The wide subcategory spanned by `minus` as a linear category.
    pub fn minus_cat(&self, cat: &LinCat) -> Result<(LinCat, Vec<Vec<Mat>>)> {
        subcategory_lincat(cat, &self.minus, "m")
    }
}

/// Builds the wide subcategory on a composition-closed subspace family that
/// contains all identities.  Returns the category (basis labels
/// `{prefix}{i}`) and, per pair, the inclusion matrix sending subspace
/// coordinates to ambient hom coordinates.
pub fn subcategory_lincat(
    cat: &LinCat,
    family: &[Vec<Subspace>],
    prefix: &str,
) -> Result<(LinCat, Vec<Vec<Mat>>)> {
    let n = cat.n_objects();
    let field = cat.field();
    let mut basis = vec![vec![Vec::new(); n]; n];
    let mut incl = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let sub = &family[x][y];
            basis[x][y] = (0..sub.dim()).map(|i| format!("{prefix}{i}")).collect();
            row.push(sub.basis().transpose());
        }
        incl.push(row);
    }
    let mut id_coeffs = Vec::with_capacity(n);
    for x in 0..n {
        let id = cat.identity(x);
        let coords = family[x][x].coords_of(&id.coeffs).ok_or_else(|| {
            CatError::AxiomViolation {
                law: "wide subcategory".into(),
                detail: format!(
                    "identity of '{}' is not in the designated subspace",
                    cat.object_name(x)
                ),
            }
        })?;
        id_coeffs.push(coords);
    }
    let mut comp = std::collections::HashMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for fi in 0..family[x][y].dim() {
                    for gi in 0..family[y][z].dim() {
                        let felt = HomElt {
                            src: x,
                            tgt: y,
                            coeffs: family[x][y].basis_vec(fi).to_vec(),
                        };
                        let gelt = HomElt {
                            src: y,
                            tgt: z,
                            coeffs: family[y][z].basis_vec(gi).to_vec(),
                        };
                        let prod = cat.compose(&gelt, &felt);
                        let coords = family[x][z].coords_of(&prod.coeffs).ok_or_else(|| {
                            CatError::CompositionNotClosed {
                                g: format!("{prefix}{gi}: {y} -> {z}"),
                                f: format!("{prefix}{fi}: {x} -> {y}"),
                                detail: "composite leaves the designated subspaces".into(),
                            }
                        })?;
                        comp.insert(
                            (
                                MorId { src: y, tgt: z, idx: gi },
                                MorId { src: x, tgt: y, idx: fi },
                            ),
                            coords,
                        );
                    }
                }
            }
        }
    }
    let objects = (0..n).map(|x| cat.object_name(x).to_string()).collect();
    let sub = LinCat::new(field, objects, basis, id_coeffs, comp)?;
    Ok((sub, incl))
}
