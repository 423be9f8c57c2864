//! Finite k-linear categories presented by structure constants.
//!
//! A [`LinCat`] has finitely many objects, a finite ordered basis for every
//! hom space `hom(x, y)`, coordinates for every identity `1_x`, and structure
//! constants expressing the composite of two basis morphisms in the basis of
//! the receiving hom space.  Composition extends bilinearly.  The composite
//! convention throughout is `compose(g, f) = g o f` for `f: x -> y` and
//! `g: y -> z`.
//!
//! Associativity and the unit laws are checkable by full enumeration over
//! basis triples; `check_axioms` reports the first violation verbatim so a
//! corrupted presentation can be located.

use crate::concrete::ConcreteCat;
use crate::error::{CatError, Result};
use scalar_linalg::{Field, Mat, Scalar};
use std::collections::HashMap;

/// A basis-morphism handle: source object, target object, basis position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId {
    pub src: usize,
    pub tgt: usize,
    pub idx: usize,
}

/// An element of a hom space `hom(src, tgt)`, as coordinates in its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElt {
    pub src: usize,
    pub tgt: usize,
    pub coeffs: Vec<Scalar>,
}

impl HomElt {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &HomElt) -> HomElt {
        assert_eq!((self.src, self.tgt), (rhs.src, rhs.tgt), "hom spaces differ");
        HomElt {
            src: self.src,
            tgt: self.tgt,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> HomElt {
        HomElt {
            src: self.src,
            tgt: self.tgt,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

/// Outcome of `check_axioms`: either a clean pass or the list of violated
/// laws with the offending basis morphisms named.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite k-linear category.  Immutable once constructed.
#[derive(Clone, Debug)]
pub struct LinCat {
    field: Field,
    objects: Vec<String>,
    /// `basis[x][y]` = ordered basis labels of `hom(x, y)`.
    basis: Vec<Vec<Vec<String>>>,
    /// Coordinates of `1_x` in `basis[x][x]`.
    id_coeffs: Vec<Vec<Scalar>>,
    /// `(g, f) -> coordinates of g o f`, for every composable basis pair.
    comp: HashMap<(MorId, MorId), Vec<Scalar>>,
}

impl LinCat {
    /// Builds a linear category from raw presentation data and verifies the
    /// unit and associativity laws.
    pub fn new(
        field: Field,
        objects: Vec<String>,
        basis: Vec<Vec<Vec<String>>>,
        id_coeffs: Vec<Vec<Scalar>>,
        comp: HashMap<(MorId, MorId), Vec<Scalar>>,
    ) -> Result<LinCat> {
        let n = objects.len();
        if basis.len() != n || basis.iter().any(|row| row.len() != n) {
            return Err(CatError::DimensionMismatch(
                "basis table shape does not match object count".into(),
            ));
        }
        if id_coeffs.len() != n {
            return Err(CatError::DimensionMismatch(
                "identity coordinate list does not match object count".into(),
            ));
        }
        for x in 0..n {
            if id_coeffs[x].len() != basis[x][x].len() {
                return Err(CatError::DimensionMismatch(format!(
                    "identity of '{}' has {} coordinates, hom({0}, {0}) has dimension {}",
                    objects[x],
                    id_coeffs[x].len(),
                    basis[x][x].len()
                )));
            }
        }
        let cat = LinCat {
            field,
            objects,
            basis,
            id_coeffs,
            comp,
        };
        // Structure constants must exist for every composable basis pair and
        // have the right length.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for fi in 0..cat.basis[x][y].len() {
                        for gi in 0..cat.basis[y][z].len() {
                            let f = MorId { src: x, tgt: y, idx: fi };
                            let g = MorId { src: y, tgt: z, idx: gi };
                            match cat.comp.get(&(g, f)) {
                                None => {
                                    return Err(CatError::CompositionNotClosed {
                                        g: cat.basis_label(g).to_string(),
                                        f: cat.basis_label(f).to_string(),
                                        detail: "(no structure constants)".into(),
                                    })
                                }
                                Some(v) if v.len() != cat.basis[x][z].len() => {
                                    return Err(CatError::DimensionMismatch(format!(
                                        "structure constants of {} o {} have wrong length",
                                        cat.basis_label(g),
                                        cat.basis_label(f)
                                    )))
                                }
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        let report = cat.check_axioms();
        if let Some(first) = report.violations.first() {
            return Err(CatError::AxiomViolation {
                law: "linear category".into(),
                detail: first.clone(),
            });
        }
        Ok(cat)
    }

    /// k-linearization of a concrete category: basis labels are the morphism
    /// names and structure constants are 0/1 vectors read off the composition
    /// table.
    pub fn linearize(c: &ConcreteCat, field: Field) -> LinCat {
        let n = c.n_objects();
        let objects: Vec<String> = (0..n).map(|x| c.object_name(x).to_string()).collect();
        let mut basis = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for y in 0..n {
                basis[x][y] = (0..c.hom_size(x, y))
                    .map(|i| {
                        c.mor_name(crate::concrete::CMor { src: x, tgt: y, idx: i })
                            .to_string()
                    })
                    .collect();
            }
        }
        let mut id_coeffs = Vec::with_capacity(n);
        for x in 0..n {
            let mut v = vec![Scalar::zero(field); c.hom_size(x, x)];
            v[c.identity(x).idx] = Scalar::one(field);
            id_coeffs.push(v);
        }
        let mut comp = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for fi in 0..c.hom_size(x, y) {
                        for gi in 0..c.hom_size(y, z) {
                            let fc = crate::concrete::CMor { src: x, tgt: y, idx: fi };
                            let gc = crate::concrete::CMor { src: y, tgt: z, idx: gi };
                            let hc = c.compose(gc, fc);
                            let mut v = vec![Scalar::zero(field); c.hom_size(x, z)];
                            v[hc.idx] = Scalar::one(field);
                            comp.insert(
                                (
                                    MorId { src: y, tgt: z, idx: gi },
                                    MorId { src: x, tgt: y, idx: fi },
                                ),
                                v,
                            );
                        }
                    }
                }
            }
        }
        // A valid ConcreteCat linearizes to a valid LinCat; the axioms were
        // already enumerated at the set level.
        LinCat {
            field,
            objects,
            basis,
            id_coeffs,
            comp,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.basis[x][y].len()
    }

    /// Total dimension of all hom spaces (the category algebra dimension).
    pub fn total_dim(&self) -> usize {
        let n = self.objects.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| self.hom_dim(x, y)))
            .sum()
    }

    pub fn basis_label(&self, m: MorId) -> &str {
        &self.basis[m.src][m.tgt][m.idx]
    }

    pub fn basis_index(&self, src: usize, tgt: usize, label: &str) -> Option<MorId> {
        self.basis[src][tgt]
            .iter()
            .position(|l| l == label)
            .map(|idx| MorId { src, tgt, idx })
    }

    /// All basis morphisms of `hom(x, y)`.
    pub fn basis_of(&self, x: usize, y: usize) -> Vec<MorId> {
        (0..self.hom_dim(x, y))
            .map(|idx| MorId { src: x, tgt: y, idx })
            .collect()
    }

    /// All basis morphisms of the category, ordered by (src, tgt, idx).
    pub fn all_basis(&self) -> Vec<MorId> {
        let n = self.objects.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                out.extend(self.basis_of(x, y));
            }
        }
        out
    }

    pub fn identity(&self, x: usize) -> HomElt {
        HomElt {
            src: x,
            tgt: x,
            coeffs: self.id_coeffs[x].clone(),
        }
    }

    pub fn zero_elt(&self, src: usize, tgt: usize) -> HomElt {
        HomElt {
            src,
            tgt,
            coeffs: vec![Scalar::zero(self.field); self.hom_dim(src, tgt)],
        }
    }

    pub fn basis_elt(&self, m: MorId) -> HomElt {
        let mut coeffs = vec![Scalar::zero(self.field); self.hom_dim(m.src, m.tgt)];
        coeffs[m.idx] = Scalar::one(self.field);
        HomElt {
            src: m.src,
            tgt: m.tgt,
            coeffs,
        }
    }

    /// Structure constants of `g o f` as coordinates in `basis(f.src, g.tgt)`.
    pub fn compose_basis(&self, g: MorId, f: MorId) -> &[Scalar] {
        assert_eq!(f.tgt, g.src, "morphisms not composable");
        &self.comp[&(g, f)]
    }

    /// Bilinear composite `g o f` of two hom elements.
    pub fn compose(&self, g: &HomElt, f: &HomElt) -> HomElt {
        assert_eq!(f.tgt, g.src, "morphisms not composable");
        let mut out = vec![Scalar::zero(self.field); self.hom_dim(f.src, g.tgt)];
        for (fi, fc) in f.coeffs.iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            for (gi, gc) in g.coeffs.iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                let s = self.compose_basis(
                    MorId { src: g.src, tgt: g.tgt, idx: gi },
                    MorId { src: f.src, tgt: f.tgt, idx: fi },
                );
                let w = fc * gc;
                for (o, c) in out.iter_mut().zip(s) {
                    *o = &*o + &(c * &w);
                }
            }
        }
        HomElt {
            src: f.src,
            tgt: g.tgt,
            coeffs: out,
        }
    }

    /// Matrix of post-composition by `f: y -> z` on `hom(x, y) -> hom(x, z)`.
    pub fn post_compose_matrix(&self, f: &HomElt, x: usize) -> Mat {
        let cols: Vec<Vec<Scalar>> = self
            .basis_of(x, f.src)
            .into_iter()
            .map(|b| self.compose(f, &self.basis_elt(b)).coeffs)
            .collect();
        if cols.is_empty() {
            return Mat::zero(self.field, self.hom_dim(x, f.tgt), 0);
        }
        Mat::from_cols(self.field, &cols)
    }

    /// Matrix of pre-composition by `f: x -> y` on `hom(y, z) -> hom(x, z)`.
    pub fn pre_compose_matrix(&self, f: &HomElt, z: usize) -> Mat {
        let cols: Vec<Vec<Scalar>> = self
            .basis_of(f.tgt, z)
            .into_iter()
            .map(|b| self.compose(&self.basis_elt(b), f).coeffs)
            .collect();
        if cols.is_empty() {
            return Mat::zero(self.field, self.hom_dim(f.src, z), 0);
        }
        Mat::from_cols(self.field, &cols)
    }

    /// Checks the unit laws and associativity on all basis morphisms/triples.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();
        let n = self.objects.len();
        for x in 0..n {
            for y in 0..n {
                for f in self.basis_of(x, y) {
                    let fe = self.basis_elt(f);
                    if self.compose(&self.identity(y), &fe) != fe {
                        violations.push(format!(
                            "left unit: 1_{} o {} != {1}",
                            self.objects[y],
                            self.basis_label(f)
                        ));
                    }
                    if self.compose(&fe, &self.identity(x)) != fe {
                        violations.push(format!(
                            "right unit: {} o 1_{} != {0}",
                            self.basis_label(f),
                            self.objects[x]
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for f in self.basis_of(x, y) {
                            for g in self.basis_of(y, z) {
                                for h in self.basis_of(z, w) {
                                    let (fe, ge, he) =
                                        (self.basis_elt(f), self.basis_elt(g), self.basis_elt(h));
                                    let a = self.compose(&he, &self.compose(&ge, &fe));
                                    let b = self.compose(&self.compose(&he, &ge), &fe);
                                    if a != b {
                                        violations.push(format!(
                                            "associativity: ({} o {}) o {} != {} o ({} o {})",
                                            self.basis_label(h),
                                            self.basis_label(g),
                                            self.basis_label(f),
                                            self.basis_label(h),
                                            self.basis_label(g),
                                            self.basis_label(f)
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    /// The opposite linear category: `hom^op(x, y) = hom(y, x)` with
    /// composition reversed.
    pub fn op(&self) -> LinCat {
        let n = self.objects.len();
        let mut basis = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for y in 0..n {
                basis[x][y] = self.basis[y][x].clone();
            }
        }
        let mut comp = HashMap::new();
        for (&(g, f), v) in &self.comp {
            // g o f in the original, with f: x->y, g: y->z, becomes
            // f^op o g^op for g^op: z->y, f^op: y->x.
            let gop = MorId { src: g.tgt, tgt: g.src, idx: g.idx };
            let fop = MorId { src: f.tgt, tgt: f.src, idx: f.idx };
            comp.insert((fop, gop), v.clone());
        }
        LinCat {
            field: self.field,
            objects: self.objects.clone(),
            basis,
            id_coeffs: self.id_coeffs.clone(),
            comp,
        }
    }

    /// Full subcategory on the listed objects (order defines the new
    /// indexing).  Returns the subcategory; the caller keeps the index map.
    pub fn full_subcat(&self, keep: &[usize]) -> LinCat {
        let objects: Vec<String> = keep.iter().map(|&x| self.objects[x].clone()).collect();
        let m = keep.len();
        let mut basis = vec![vec![Vec::new(); m]; m];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                basis[i][j] = self.basis[x][y].clone();
            }
        }
        let id_coeffs: Vec<Vec<Scalar>> =
            keep.iter().map(|&x| self.id_coeffs[x].clone()).collect();
        let mut comp = HashMap::new();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        for (&(g, f), v) in &self.comp {
            if let (Some(&gs), Some(&gt), Some(&fs)) =
                (pos.get(&g.src), pos.get(&g.tgt), pos.get(&f.src))
            {
                comp.insert(
                    (
                        MorId { src: gs, tgt: gt, idx: g.idx },
                        MorId { src: fs, tgt: gs, idx: f.idx },
                    ),
                    v.clone(),
                );
            }
        }
        LinCat {
            field: self.field,
            objects,
            basis,
            id_coeffs,
            comp,
        }
    }
}
