//! Latching and matching objects of a left module at an object, computed
//! along two independent routes, plus the canonical comparison map.
//!
//! At `x` of degree `a`, the latching object of `Y` is the value at `x` of
//! the module induced up from the restriction of `Y` to degrees `< a`; the
//! matching object is the value of the coinduced module, i.e. natural
//! families out of the right representable.  The cofinality theorem says
//! both can be computed with the full hom spaces or with only the
//! degree-raising (resp. degree-lowering) family, and this implementation
//! verifies the two routes agree by an explicit comparison isomorphism.
//! The composite `m . l` is verified to equal the canonical transformation
//! `phi (x) v |-> (f |-> Y(f . phi) v)`.
//!
//! The cokernel of `l` and the kernel of `m` are returned as modules over
//! the local degree-0 algebra: they compute `standard-dual(x) (x)_C Y` and
//! `Hom(standard(x), Y)` respectively, which is checked elsewhere.

use crate::error::{HomalgError, Result};
use lincat_core::{Algebra, AlgMod, HomElt, LinCat, MorId, Rep, Side};
use reedy::ReedyStructure;
use scalar_linalg::{Mat, QuotientSpace, Scalar, Subspace};

pub struct LatchingData {
    pub x: usize,
    /// Dimension of the latching object (full-hom route).
    pub latching_dim: usize,
    /// Dimension computed with degree-raising morphisms only.
    pub plus_route_dim: usize,
    pub matching_dim: usize,
    /// Dimension computed with degree-lowering morphisms only.
    pub minus_route_dim: usize,
    /// The latching map `l: L_x Y -> Y(x)` (shape `dim Y(x) x latching_dim`).
    pub l: Mat,
    /// The matching map `m: Y(x) -> M_x Y` (shape `matching_dim x dim Y(x)`).
    pub m: Mat,
    pub l_monic: bool,
    pub m_epic: bool,
    pub coker_l_dim: usize,
    pub ker_m_dim: usize,
    pub algebra: Algebra,
    pub coker_module: AlgMod,
    pub ker_module: AlgMod,
}

struct Offsets {
    offs: Vec<usize>,
    total: usize,
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Offsets {
    let mut offs = Vec::new();
    let mut total = 0usize;
    for s in sizes {
        offs.push(total);
        total += s;
    }
    Offsets { offs, total }
}

pub fn latching_matching(
    cat: &LinCat,
    r: &ReedyStructure,
    y: &Rep,
    x: usize,
) -> Result<LatchingData> {
    assert_eq!(y.side(), Side::Left, "latching/matching is defined for left modules");
    let field = cat.field();
    let n = cat.n_objects();
    let alpha = r.degree(x);
    let lows: Vec<usize> = (0..n).filter(|&w| r.degree(w) < alpha).collect();
    let low_pos = |w: usize| lows.iter().position(|&u| u == w);

    // --- Latching, full-hom route -----------------------------------------
    // Raw space: sum over low w of hom(w, x) (x) Y(w); coordinates
    // (w, phi, v) -> off[w] + phi * dim Y(w) + v.
    let lat = offsets(lows.iter().map(|&w| cat.hom_dim(w, x) * y.dim_at(w)));
    let mut lat_rels: Vec<Vec<Scalar>> = Vec::new();
    for g in cat.all_basis() {
        let (Some(wi), Some(wpi)) = (low_pos(g.src), low_pos(g.tgt)) else { continue };
        let gy = y.act_basis(g); // Y(src) -> Y(tgt)
        for phi_idx in 0..cat.hom_dim(g.tgt, x) {
            let phi = MorId { src: g.tgt, tgt: x, idx: phi_idx };
            let phi_g = cat.compose_basis(phi, g); // coords in hom(src, x)
            for v in 0..y.dim_at(g.src) {
                let mut rel = vec![Scalar::zero(field); lat.total];
                for (t, c) in phi_g.iter().enumerate() {
                    if !c.is_zero() {
                        let idx = lat.offs[wi] + t * y.dim_at(g.src) + v;
                        rel[idx] = &rel[idx] + c;
                    }
                }
                for b in 0..y.dim_at(g.tgt) {
                    let c = &gy[(b, v)];
                    if !c.is_zero() {
                        let idx = lat.offs[wpi] + phi_idx * y.dim_at(g.tgt) + b;
                        rel[idx] = &rel[idx] - c;
                    }
                }
                if rel.iter().any(|s| !s.is_zero()) {
                    lat_rels.push(rel);
                }
            }
        }
    }
    let lat_q = QuotientSpace::new(Subspace::from_spanning(field, lat.total, &lat_rels));
    let latching_dim = lat_q.dim();

    // l in raw coordinates: phi (x) v -> Y(phi) v.
    let mut l_raw = Mat::zero(field, y.dim_at(x), lat.total);
    for (wi, &w) in lows.iter().enumerate() {
        for phi_idx in 0..cat.hom_dim(w, x) {
            let act = y.act_basis(MorId { src: w, tgt: x, idx: phi_idx });
            for v in 0..y.dim_at(w) {
                let col = lat.offs[wi] + phi_idx * y.dim_at(w) + v;
                for row in 0..y.dim_at(x) {
                    l_raw[(row, col)] = act[(row, v)].clone();
                }
            }
        }
    }
    let l = l_raw.mul(lat_q.section());
    let l_monic = l.rank() == latching_dim;

    // --- Latching, degree-raising route -----------------------------------
    let plat = offsets(lows.iter().map(|&w| r.plus(w, x).dim() * y.dim_at(w)));
    let mut plat_rels: Vec<Vec<Scalar>> = Vec::new();
    for (wi, &w) in lows.iter().enumerate() {
        for (wpi, &wp) in lows.iter().enumerate() {
            for k in 0..r.plus(w, wp).dim() {
                let g = HomElt { src: w, tgt: wp, coeffs: r.plus(w, wp).basis_vec(k).to_vec() };
                let gy = y.act_elt(&g);
                for phi_idx in 0..r.plus(wp, x).dim() {
                    let phi = HomElt {
                        src: wp,
                        tgt: x,
                        coeffs: r.plus(wp, x).basis_vec(phi_idx).to_vec(),
                    };
                    let prod = cat.compose(&phi, &g);
                    let coords = r.plus(w, x).coords_of(&prod.coeffs).ok_or_else(|| {
                        HomalgError::CheckFailed(
                            "degree-raising family is not closed under composition".into(),
                        )
                    })?;
                    for v in 0..y.dim_at(w) {
                        let mut rel = vec![Scalar::zero(field); plat.total];
                        for (t, c) in coords.iter().enumerate() {
                            if !c.is_zero() {
                                let idx = plat.offs[wi] + t * y.dim_at(w) + v;
                                rel[idx] = &rel[idx] + c;
                            }
                        }
                        for b in 0..y.dim_at(wp) {
                            let c = &gy[(b, v)];
                            if !c.is_zero() {
                                let idx = plat.offs[wpi] + phi_idx * y.dim_at(wp) + b;
                                rel[idx] = &rel[idx] - c;
                            }
                        }
                        if rel.iter().any(|s| !s.is_zero()) {
                            plat_rels.push(rel);
                        }
                    }
                }
            }
        }
    }
    let plat_q = QuotientSpace::new(Subspace::from_spanning(field, plat.total, &plat_rels));
    let plus_route_dim = plat_q.dim();

    // Comparison: include each plus subspace into the full hom space.
    let mut cmp_raw = Mat::zero(field, lat.total, plat.total);
    for (wi, &w) in lows.iter().enumerate() {
        for phi_idx in 0..r.plus(w, x).dim() {
            let amb = r.plus(w, x).basis_vec(phi_idx);
            for v in 0..y.dim_at(w) {
                let col = plat.offs[wi] + phi_idx * y.dim_at(w) + v;
                for (t, c) in amb.iter().enumerate() {
                    if !c.is_zero() {
                        let row = lat.offs[wi] + t * y.dim_at(w) + v;
                        cmp_raw[(row, col)] = &cmp_raw[(row, col)] + c;
                    }
                }
            }
        }
    }
    let cmp = lat_q.map_into_quotient(&cmp_raw).mul(plat_q.section());
    if plus_route_dim != latching_dim || cmp.rank() != latching_dim {
        return Err(HomalgError::CheckFailed(format!(
            "latching cofinality fails at {}: full route {}, raising route {}, \
             comparison rank {}",
            cat.object_name(x),
            latching_dim,
            plus_route_dim,
            cmp.rank()
        )));
    }

    // --- Matching, full-hom route -----------------------------------------
    // Variables: for each low w a matrix t_w: hom(x, w) -> Y(w), entry
    // (b, f) at off[w] + b * hom(x, w) + f.
    let mat = offsets(lows.iter().map(|&w| y.dim_at(w) * cat.hom_dim(x, w)));
    let mut mat_rows: Vec<Vec<Scalar>> = Vec::new();
    for g in cat.all_basis() {
        let (Some(wi), Some(wpi)) = (low_pos(g.src), low_pos(g.tgt)) else { continue };
        let gy = y.act_basis(g);
        for f_idx in 0..cat.hom_dim(x, g.src) {
            let f = MorId { src: x, tgt: g.src, idx: f_idx };
            let gf = cat.compose_basis(g, f); // coords in hom(x, tgt)
            for b in 0..y.dim_at(g.tgt) {
                let mut row = vec![Scalar::zero(field); mat.total];
                for (s, c) in gf.iter().enumerate() {
                    if !c.is_zero() {
                        let idx = mat.offs[wpi] + b * cat.hom_dim(x, g.tgt) + s;
                        row[idx] = &row[idx] + c;
                    }
                }
                for a in 0..y.dim_at(g.src) {
                    let c = &gy[(b, a)];
                    if !c.is_zero() {
                        let idx = mat.offs[wi] + a * cat.hom_dim(x, g.src) + f_idx;
                        row[idx] = &row[idx] - c;
                    }
                }
                if row.iter().any(|s| !s.is_zero()) {
                    mat_rows.push(row);
                }
            }
        }
    }
    let constraint = if mat_rows.is_empty() {
        Mat::zero(field, 0, mat.total)
    } else {
        Mat::from_rows(field, &mat_rows)
    };
    let kernel = Subspace::from_spanning(field, mat.total, &constraint.kernel_basis());
    let matching_dim = kernel.dim();

    // m: xi -> (f -> Y(f) xi) in kernel coordinates.
    let family_of = |k: usize| -> Vec<Scalar> {
        let mut flat = vec![Scalar::zero(field); mat.total];
        for (wi, &w) in lows.iter().enumerate() {
            for f_idx in 0..cat.hom_dim(x, w) {
                let act = y.act_basis(MorId { src: x, tgt: w, idx: f_idx });
                for b in 0..y.dim_at(w) {
                    flat[mat.offs[wi] + b * cat.hom_dim(x, w) + f_idx] = act[(b, k)].clone();
                }
            }
        }
        flat
    };
    let m_cols: Vec<Vec<Scalar>> = (0..y.dim_at(x))
        .map(|k| {
            kernel.coords_of(&family_of(k)).ok_or_else(|| {
                HomalgError::CheckFailed(
                    "the canonical family fails the matching naturality equations".into(),
                )
            })
        })
        .collect::<Result<_>>()?;
    let m = if y.dim_at(x) == 0 {
        Mat::zero(field, matching_dim, 0)
    } else {
        Mat::from_cols(field, &m_cols)
    };
    let m_epic = m.rank() == matching_dim;

    // --- Matching, degree-lowering route ----------------------------------
    let mmat = offsets(lows.iter().map(|&w| y.dim_at(w) * r.minus(x, w).dim()));
    let mut mmat_rows: Vec<Vec<Scalar>> = Vec::new();
    for (wi, &w) in lows.iter().enumerate() {
        for (wpi, &wp) in lows.iter().enumerate() {
            for k in 0..r.minus(w, wp).dim() {
                let g = HomElt { src: w, tgt: wp, coeffs: r.minus(w, wp).basis_vec(k).to_vec() };
                let gy = y.act_elt(&g);
                for f_idx in 0..r.minus(x, w).dim() {
                    let f = HomElt {
                        src: x,
                        tgt: w,
                        coeffs: r.minus(x, w).basis_vec(f_idx).to_vec(),
                    };
                    let prod = cat.compose(&g, &f);
                    let coords = r.minus(x, wp).coords_of(&prod.coeffs).ok_or_else(|| {
                        HomalgError::CheckFailed(
                            "degree-lowering family is not closed under composition".into(),
                        )
                    })?;
                    for b in 0..y.dim_at(wp) {
                        let mut row = vec![Scalar::zero(field); mmat.total];
                        for (s, c) in coords.iter().enumerate() {
                            if !c.is_zero() {
                                let idx = mmat.offs[wpi] + b * r.minus(x, wp).dim() + s;
                                row[idx] = &row[idx] + c;
                            }
                        }
                        for a in 0..y.dim_at(w) {
                            let c = &gy[(b, a)];
                            if !c.is_zero() {
                                let idx = mmat.offs[wi] + a * r.minus(x, w).dim() + f_idx;
                                row[idx] = &row[idx] - c;
                            }
                        }
                        if row.iter().any(|s| !s.is_zero()) {
                            mmat_rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let mconstraint = if mmat_rows.is_empty() {
        Mat::zero(field, 0, mmat.total)
    } else {
        Mat::from_rows(field, &mmat_rows)
    };
    let mkernel = Subspace::from_spanning(field, mmat.total, &mconstraint.kernel_basis());
    let minus_route_dim = mkernel.dim();

    // Comparison: restrict a full family to the degree-lowering subspaces.
    let mut rst = Mat::zero(field, mmat.total, mat.total);
    for (wi, &w) in lows.iter().enumerate() {
        for j in 0..r.minus(x, w).dim() {
            let amb = r.minus(x, w).basis_vec(j);
            for b in 0..y.dim_at(w) {
                let row = mmat.offs[wi] + b * r.minus(x, w).dim() + j;
                for (s, c) in amb.iter().enumerate() {
                    if !c.is_zero() {
                        let col = mat.offs[wi] + b * cat.hom_dim(x, w) + s;
                        rst[(row, col)] = &rst[(row, col)] + c;
                    }
                }
            }
        }
    }
    let mut mcmp_cols: Vec<Vec<Scalar>> = Vec::with_capacity(matching_dim);
    for i in 0..matching_dim {
        let restricted = rst.mul_vec(kernel.basis_vec(i));
        let coords = mkernel.coords_of(&restricted).ok_or_else(|| {
            HomalgError::CheckFailed(
                "restricting a natural family breaks the degree-lowering equations".into(),
            )
        })?;
        mcmp_cols.push(coords);
    }
    let mcmp = if matching_dim == 0 {
        Mat::zero(field, minus_route_dim, 0)
    } else {
        Mat::from_cols(field, &mcmp_cols)
    };
    if minus_route_dim != matching_dim || mcmp.rank() != matching_dim {
        return Err(HomalgError::CheckFailed(format!(
            "matching cofinality fails at {}: full route {}, lowering route {}, \
             comparison rank {}",
            cat.object_name(x),
            matching_dim,
            minus_route_dim,
            mcmp.rank()
        )));
    }

    // --- The canonical transformation factors as m . l --------------------
    let mut tau_cols: Vec<Vec<Scalar>> = Vec::with_capacity(lat.total);
    for (wi, &w) in lows.iter().enumerate() {
        let _ = wi;
        for phi_idx in 0..cat.hom_dim(w, x) {
            let phi = cat.basis_elt(MorId { src: w, tgt: x, idx: phi_idx });
            for v in 0..y.dim_at(w) {
                let mut flat = vec![Scalar::zero(field); mat.total];
                for (wpi2, &wp) in lows.iter().enumerate() {
                    for f_idx in 0..cat.hom_dim(x, wp) {
                        let f = cat.basis_elt(MorId { src: x, tgt: wp, idx: f_idx });
                        let act = y.act_elt(&cat.compose(&f, &phi)); // Y(w) -> Y(wp)
                        for b in 0..y.dim_at(wp) {
                            flat[mat.offs[wpi2] + b * cat.hom_dim(x, wp) + f_idx] =
                                act[(b, v)].clone();
                        }
                    }
                }
                let coords = kernel.coords_of(&flat).ok_or_else(|| {
                    HomalgError::CheckFailed(
                        "the canonical transformation is not a natural family".into(),
                    )
                })?;
                tau_cols.push(coords);
            }
        }
    }
    let tau_raw = if lat.total == 0 {
        Mat::zero(field, matching_dim, 0)
    } else {
        Mat::from_cols(field, &tau_cols)
    };
    let tau = tau_raw.mul(lat_q.section());
    if m.mul(&l) != tau {
        return Err(HomalgError::CheckFailed(format!(
            "m . l differs from the canonical transformation at {}",
            cat.object_name(x)
        )));
    }

    // --- Cokernel and kernel as local-algebra modules ---------------------
    let algebra = r.local_algebra(cat, x)?;
    let a_elt = |i: usize| HomElt {
        src: x,
        tgt: x,
        coeffs: r.plus(x, x).lincomb(&algebra.basis_vec(i)),
    };

    let image_l = Subspace::from_spanning(
        field,
        y.dim_at(x),
        &(0..l.cols()).map(|j| l.col(j)).collect::<Vec<_>>(),
    );
    let coker_q = QuotientSpace::new(image_l);
    let coker_action: Vec<Mat> = (0..algebra.dim())
        .map(|i| {
            let act = y.act_elt(&a_elt(i));
            coker_q.map_into_quotient(&act).mul(coker_q.section())
        })
        .collect();
    let coker_module = AlgMod::new(&algebra, Side::Left, coker_q.dim(), coker_action)?;

    let ker_sub = Subspace::from_spanning(field, y.dim_at(x), &m.kernel_basis());
    let ker_action: Vec<Mat> = (0..algebra.dim())
        .map(|i| {
            let act = y.act_elt(&a_elt(i));
            let cols: Vec<Vec<Scalar>> = (0..ker_sub.dim())
                .map(|j| {
                    ker_sub
                        .coords_of(&act.mul_vec(ker_sub.basis_vec(j)))
                        .expect("the kernel of m is stable under the local algebra")
                })
                .collect();
            if cols.is_empty() {
                Mat::zero(field, 0, 0)
            } else {
                Mat::from_cols(field, &cols)
            }
        })
        .collect();
    let ker_module = AlgMod::new(&algebra, Side::Left, ker_sub.dim(), ker_action)?;

    Ok(LatchingData {
        x,
        latching_dim,
        plus_route_dim,
        matching_dim,
        minus_route_dim,
        l,
        m,
        l_monic,
        m_epic,
        coker_l_dim: coker_q.dim(),
        ker_m_dim: ker_sub.dim(),
        algebra,
        coker_module,
        ker_module,
    })
}
