//! Truncation to low degrees (a full subcategory) and the quotient category
//! on high degrees.

use crate::error::Result;
use crate::ideal::ideal_i;
use crate::structure::ReedyStructure;
use lincat_core::{LinCat, MorId};
use scalar_linalg::{QuotientSpace, Subspace};
use std::collections::HashMap;

/// The full subcategory on objects of degree < `alpha`, with the inherited
/// Reedy structure and the list of kept original object indices.
pub fn truncate(
    cat: &LinCat,
    r: &ReedyStructure,
    alpha: u32,
) -> Result<(LinCat, ReedyStructure, Vec<usize>)> {
    let keep: Vec<usize> = (0..cat.n_objects())
        .filter(|&x| r.degree(x) < alpha)
        .collect();
    let sub = cat.full_subcat(&keep);
    let degree: Vec<u32> = keep.iter().map(|&x| r.degree(x)).collect();
    let plus: Vec<Vec<Subspace>> = keep
        .iter()
        .map(|&x| keep.iter().map(|&y| r.plus(x, y).clone()).collect())
        .collect();
    let minus: Vec<Vec<Subspace>> = keep
        .iter()
        .map(|&x| keep.iter().map(|&y| r.minus(x, y).clone()).collect())
        .collect();
    let rs = ReedyStructure::new(&sub, degree, plus, minus)?;
    Ok((sub, rs, keep))
}

/// Per-pair quotient data of [`quotient_cat`], for transporting morphisms
/// between the original category and the quotient.
#[derive(Clone, Debug)]
pub struct QuotientData {
    /// Kept original object indices (degree >= alpha), in order.
    pub keep: Vec<usize>,
    /// `quots[i][j]`: hom(keep[i], keep[j]) modulo the ideal.
    pub quots: Vec<Vec<QuotientSpace>>,
}

/// The quotient category on objects of degree >= `alpha`, whose hom spaces
/// are the original homs modulo the ideal of morphisms factoring through
/// degree < `alpha`.  Degrees are shifted down by `alpha`.
pub fn quotient_cat(
    cat: &LinCat,
    r: &ReedyStructure,
    alpha: u32,
) -> Result<(LinCat, ReedyStructure, QuotientData)> {
    let ideal = ideal_i(cat, r, alpha)?;
    let keep: Vec<usize> = (0..cat.n_objects())
        .filter(|&x| r.degree(x) >= alpha)
        .collect();
    let field = cat.field();
    let m = keep.len();
    let mut quots: Vec<Vec<QuotientSpace>> = Vec::with_capacity(m);
    for &x in &keep {
        let mut row = Vec::with_capacity(m);
        for &y in &keep {
            row.push(QuotientSpace::new(ideal.space(x, y).clone()));
        }
        quots.push(row);
    }
    let mut basis = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            basis[i][j] = (0..quots[i][j].dim()).map(|t| format!("q{t}")).collect();
        }
    }
    let id_coeffs: Vec<Vec<scalar_linalg::Scalar>> = keep
        .iter()
        .enumerate()
        .map(|(i, &x)| quots[i][i].project(&cat.identity(x).coeffs))
        .collect();
    let mut comp = HashMap::new();
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                for fi in 0..quots[i][j].dim() {
                    for gi in 0..quots[j][l].dim() {
                        // Lift class representatives, compose upstairs,
                        // project back down; well defined because the kernel
                        // is a two-sided ideal.
                        let f = lincat_core::HomElt {
                            src: keep[i],
                            tgt: keep[j],
                            coeffs: quots[i][j].lift(&unit(field, quots[i][j].dim(), fi)),
                        };
                        let g = lincat_core::HomElt {
                            src: keep[j],
                            tgt: keep[l],
                            coeffs: quots[j][l].lift(&unit(field, quots[j][l].dim(), gi)),
                        };
                        let prod = cat.compose(&g, &f);
                        comp.insert(
                            (
                                MorId { src: j, tgt: l, idx: gi },
                                MorId { src: i, tgt: j, idx: fi },
                            ),
                            quots[i][l].project(&prod.coeffs),
                        );
                    }
                }
            }
        }
    }
    let objects = keep.iter().map(|&x| cat.object_name(x).to_string()).collect();
    let qcat = LinCat::new(field, objects, basis, id_coeffs, comp)?;
    // Induced Reedy structure: images of plus/minus under the projections,
    // degrees shifted to start at 0.
    let degree: Vec<u32> = keep.iter().map(|&x| r.degree(x) - alpha).collect();
    let mut plus = Vec::with_capacity(m);
    let mut minus = Vec::with_capacity(m);
    for i in 0..m {
        let mut prow = Vec::with_capacity(m);
        let mut mrow = Vec::with_capacity(m);
        for j in 0..m {
            let q = &quots[i][j];
            let project_family = |sub: &Subspace| {
                let imgs: Vec<Vec<scalar_linalg::Scalar>> = (0..sub.dim())
                    .map(|b| q.project(sub.basis_vec(b)))
                    .collect();
                Subspace::from_spanning(field, q.dim(), &imgs)
            };
            prow.push(project_family(r.plus(keep[i], keep[j])));
            mrow.push(project_family(r.minus(keep[i], keep[j])));
        }
        plus.push(prow);
        minus.push(mrow);
    }
    let rs = ReedyStructure::new(&qcat, degree, plus, minus)?;
    Ok((qcat, rs, QuotientData { keep, quots }))
}

fn unit(field: scalar_linalg::Field, dim: usize, i: usize) -> Vec<scalar_linalg::Scalar> {
    let mut v = vec![scalar_linalg::Scalar::zero(field); dim];
    v[i] = scalar_linalg::Scalar::one(field);
    v
}
