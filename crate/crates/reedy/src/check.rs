//! Axiom verification for Reedy structures and the two degree-direction
//! partial orders.

use crate::error::{ReedyError, Result};
use crate::rho::rho_map;
use crate::structure::ReedyStructure;
use lincat_core::{HomElt, LinCat};
use scalar_linalg::Subspace;

/// Outcome of one axiom check.
#[derive(Clone, Debug)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Per-axiom report of [`check_reedy`].
#[derive(Clone, Debug)]
pub struct ReedyReport {
    pub axioms: Vec<AxiomResult>,
    /// Pairs where ρ fails, with (domain dim, codomain dim, rank).
    pub rho_failures: Vec<(usize, usize, usize, usize, usize)>,
}

impl ReedyReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failed_axioms(&self) -> Vec<&AxiomResult> {
        self.axioms.iter().filter(|a| !a.passed).collect()
    }
}

/// Verifies all axioms of a generalized k-linear Reedy structure:
/// subcategory closure of the two designated families, the two degree
/// directions, the agreement of the families on endomorphisms, and the
/// bijectivity of the composition map ρ at every pair.
pub fn check_reedy(cat: &LinCat, r: &ReedyStructure) -> ReedyReport {
    let n = cat.n_objects();
    let mut axioms = Vec::new();
    let mut rho_failures = Vec::new();

    // Identities belong to both families.
    {
        let mut bad = Vec::new();
        for x in 0..n {
            let id = cat.identity(x);
            if !r.plus(x, x).contains(&id.coeffs) {
                bad.push(format!("1_{} not in plus", cat.object_name(x)));
            }
            if !r.minus(x, x).contains(&id.coeffs) {
                bad.push(format!("1_{} not in minus", cat.object_name(x)));
            }
        }
        axioms.push(AxiomResult {
            name: "identities in both subcategories".into(),
            passed: bad.is_empty(),
            detail: bad.join("; "),
        });
    }

    // Closure under composition.
    for (name, family) in [("plus", FamilyKind::Plus), ("minus", FamilyKind::Minus)] {
        let mut bad = Vec::new();
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let f_sub = family.get(r, x, y);
                    let g_sub = family.get(r, y, z);
                    let h_sub = family.get(r, x, z);
                    for fi in 0..f_sub.dim() {
                        for gi in 0..g_sub.dim() {
                            let f = HomElt { src: x, tgt: y, coeffs: f_sub.basis_vec(fi).to_vec() };
                            let g = HomElt { src: y, tgt: z, coeffs: g_sub.basis_vec(gi).to_vec() };
                            let prod = cat.compose(&g, &f);
                            if !h_sub.contains(&prod.coeffs) {
                                bad.push(format!(
                                    "composite of {name} basis elements ({}, {}, {}) leaves {name}",
                                    cat.object_name(x),
                                    cat.object_name(y),
                                    cat.object_name(z)
                                ));
                                if bad.len() >= 5 {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        axioms.push(AxiomResult {
            name: format!("{name} closed under composition"),
            passed: bad.is_empty(),
            detail: bad.join("; "),
        });
    }

    // (a) plus raises degree; (b) minus lowers degree.
    {
        let mut bad = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && r.plus(x, y).dim() > 0 && r.degree(y) <= r.degree(x) {
                    bad.push(format!(
                        "plus({}, {}) nonzero but degree does not increase",
                        cat.object_name(x),
                        cat.object_name(y)
                    ));
                }
            }
        }
        axioms.push(AxiomResult {
            name: "(a) plus raises degree".into(),
            passed: bad.is_empty(),
            detail: bad.join("; "),
        });
    }
    {
        let mut bad = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && r.minus(x, y).dim() > 0 && r.degree(x) <= r.degree(y) {
                    bad.push(format!(
                        "minus({}, {}) nonzero but degree does not decrease",
                        cat.object_name(x),
                        cat.object_name(y)
                    ));
                }
            }
        }
        axioms.push(AxiomResult {
            name: "(b) minus lowers degree".into(),
            passed: bad.is_empty(),
            detail: bad.join("; "),
        });
    }

    // (c) plus(x, x) = minus(x, x).
    {
        let mut bad = Vec::new();
        for x in 0..n {
            if r.plus(x, x) != r.minus(x, x) {
                bad.push(format!(
                    "plus and minus disagree on endomorphisms of {}",
                    cat.object_name(x)
                ));
            }
        }
        axioms.push(AxiomResult {
            name: "(c) families agree on endomorphisms".into(),
            passed: bad.is_empty(),
            detail: bad.join("; "),
        });
    }

    // (d) ρ bijective at every pair.  Requires the identity and closure
    // checks (the first three axioms) to have passed, because the balanced
    // tensors need the local algebras; the degree axioms (a)-(c) do not
    // block the assembly of ρ.
    {
        let closure_ok = axioms.iter().take(3).all(|a| a.passed);
        if closure_ok {
            let mut bad = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    match rho_map(cat, r, x, y) {
                        Ok(rho) => {
                            if !rho.is_bijective() {
                                rho_failures.push((
                                    x,
                                    y,
                                    rho.domain_dim(),
                                    rho.codomain_dim(),
                                    rho.mat.rank(),
                                ));
                                bad.push(format!(
                                    "rho at ({}, {}): domain {}, codomain {}, rank {}",
                                    cat.object_name(x),
                                    cat.object_name(y),
                                    rho.domain_dim(),
                                    rho.codomain_dim(),
                                    rho.mat.rank()
                                ));
                            }
                        }
                        Err(e) => bad.push(format!(
                            "rho at ({}, {}) could not be assembled: {e}",
                            cat.object_name(x),
                            cat.object_name(y)
                        )),
                    }
                }
            }
            axioms.push(AxiomResult {
                name: "(d) composition map bijective".into(),
                passed: bad.is_empty(),
                detail: bad.join("; "),
            });
        } else {
            axioms.push(AxiomResult {
                name: "(d) composition map bijective".into(),
                passed: false,
                detail: "skipped: earlier axioms failed".into(),
            });
        }
    }

    ReedyReport { axioms, rho_failures }
}

#[derive(Clone, Copy)]
enum FamilyKind {
    Plus,
    Minus,
}

impl FamilyKind {
    fn get<'a>(self, r: &'a ReedyStructure, x: usize, y: usize) -> &'a Subspace {
        match self {
            FamilyKind::Plus => r.plus(x, y),
            FamilyKind::Minus => r.minus(x, y),
        }
    }
}

/// The two partial orders on objects.  `below_minus[a][b]` holds when `a` is
/// reachable from `b` through nonzero degree-lowering homs (`a ≼ b`);
/// `below_plus[a][b]` holds when `b` is reachable from `a` through nonzero
/// degree-raising homs (`a ≼′ b`).  Both are reflexive-transitive closures.
#[derive(Clone, Debug)]
pub struct PartialOrders {
    pub below_minus: Vec<Vec<bool>>,
    pub below_plus: Vec<Vec<bool>>,
}

impl PartialOrders {
    /// `a ≼ b` in the degree-lowering order.
    pub fn le_minus(&self, a: usize, b: usize) -> bool {
        self.below_minus[a][b]
    }

    /// `a ≼′ b` in the degree-raising order.
    pub fn le_plus(&self, a: usize, b: usize) -> bool {
        self.below_plus[a][b]
    }

    /// Strictly below in the degree-lowering order.
    pub fn lt_minus(&self, a: usize, b: usize) -> bool {
        a != b && self.below_minus[a][b]
    }
}

/// Computes both orders and verifies antisymmetry of each closure.
pub fn partial_orders(cat: &LinCat, r: &ReedyStructure) -> Result<PartialOrders> {
    let n = cat.n_objects();
    // Step relations: minus-step from b to a when minus(b, a) is nonzero;
    // plus-step from a to b when plus(a, b) is nonzero.
    let mut below_minus = vec![vec![false; n]; n];
    let mut below_plus = vec![vec![false; n]; n];
    for a in 0..n {
        below_minus[a][a] = true;
        below_plus[a][a] = true;
    }
    for src in 0..n {
        for tgt in 0..n {
            if r.minus(src, tgt).dim() > 0 {
                below_minus[tgt][src] = true;
            }
            if r.plus(src, tgt).dim() > 0 {
                below_plus[src][tgt] = true;
            }
        }
    }
    transitive_closure(&mut below_minus);
    transitive_closure(&mut below_plus);
    for (rel_name, rel) in [("minus", &below_minus), ("plus", &below_plus)] {
        for a in 0..n {
            for b in (a + 1)..n {
                if rel[a][b] && rel[b][a] {
                    return Err(ReedyError::AntisymmetryViolation {
                        relation: rel_name.into(),
                        x: cat.object_name(a).to_string(),
                        y: cat.object_name(b).to_string(),
                    });
                }
            }
        }
    }
    Ok(PartialOrders { below_minus, below_plus })
}

fn transitive_closure(rel: &mut [Vec<bool>]) {
    let n = rel.len();
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
}
