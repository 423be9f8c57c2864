//! The two sufficient decomposition criteria decided directly on the
//! category: central idempotents generating the low-degree ideals, and
//! nondegenerate composition pairings (with its dual form).

use crate::error::{DecompositionError, Result};
use crate::freeness::{free_basis, group_algebra_semisimple, FreenessVerdict};
use crate::homsolve::{delta_projective_two_route, standard_hom_table, standard_modules};
use crate::idempotent::{find_central_idempotent, verify_split_sequence, CentralIdempotent};
use crate::verdict::{ConditionReport, CriterionTag, DecompositionVerdict};
use lincat_core::{Algebra, AlgMod, HomElt, LinCat};
use reedy::{ideal_i_x, ReedyStructure};
use scalar_linalg::{Mat, QuotientSpace, Scalar, Subspace};

/// Fills the structural fields shared by all criteria and, when every
/// condition passed, asserts the promised consequences (diagonal hom table,
/// endomorphism algebras of local size, projective standard modules).
fn assemble_verdict(
    cat: &LinCat,
    r: &ReedyStructure,
    criterion: CriterionTag,
    conditions: Vec<ConditionReport>,
    idempotents: Option<Vec<Option<CentralIdempotent>>>,
) -> Result<DecompositionVerdict> {
    let n = cat.n_objects();
    let deltas = standard_modules(cat, r)?;
    let hom_table = standard_hom_table(cat, &deltas);
    let end_dims: Vec<usize> = (0..n).map(|x| hom_table[x][x]).collect();
    let local_dims: Vec<usize> = (0..n).map(|x| r.plus(x, x).dim()).collect();
    let mut delta_projective = Vec::with_capacity(n);
    for (x, (delta, proj)) in deltas.iter().enumerate() {
        delta_projective.push(delta_projective_two_route(cat, x, delta, proj)?);
    }
    let idempotents = match idempotents {
        Some(v) => v,
        None => {
            let mut v = Vec::with_capacity(n);
            for x in 0..n {
                v.push(find_central_idempotent(cat, r, x)?);
            }
            v
        }
    };
    let passed = conditions.iter().all(|c| c.passed);
    let verdict = DecompositionVerdict {
        criterion,
        conditions,
        idempotents,
        hom_table,
        end_dims,
        local_dims,
        delta_projective,
        passed,
    };
    if verdict.passed {
        if !verdict.orthogonal() {
            return Err(DecompositionError::CheckFailed(
                "criterion passed but the standard-module hom table is not diagonal".into(),
            ));
        }
        if verdict.end_dims != verdict.local_dims {
            return Err(DecompositionError::CheckFailed(format!(
                "criterion passed but End(Δ) dims {:?} differ from local algebra dims {:?}",
                verdict.end_dims, verdict.local_dims
            )));
        }
        if let Some(x) = verdict.delta_projective.iter().position(|&b| !b) {
            return Err(DecompositionError::CheckFailed(format!(
                "criterion passed but the standard module at {} is not projective",
                cat.object_name(x)
            )));
        }
    }
    Ok(verdict)
}

/// Projectivity with a cheap freeness-first path: an explicit algebra basis
/// certifies freeness (hence projectivity) without the splitting solve.
fn module_projective(alg: &Algebra, m: &AlgMod) -> bool {
    match free_basis(alg, m) {
        FreenessVerdict::Free { .. } => true,
        _ => m.is_projective(alg),
    }
}

/// Condition (a): every raising subspace is a projective right module and
/// every lowering subspace a projective left module over the local algebra
/// at its degree-0 end.
fn projectivity_condition(cat: &LinCat, r: &ReedyStructure) -> Result<ConditionReport> {
    let n = cat.n_objects();
    let mut passed = true;
    let mut witnesses = Vec::new();
    for z in 0..n {
        let alg = r.local_algebra(cat, z)?;
        for y in 0..n {
            if r.plus(z, y).dim() == 0 {
                continue;
            }
            let module = r.plus_right_module(cat, z, y)?;
            let ok = module_projective(&alg, &module);
            passed &= ok;
            witnesses.push(format!(
                "plus({}, {}) as right module over A_{}: {}",
                cat.object_name(z),
                cat.object_name(y),
                cat.object_name(z),
                if ok { "projective" } else { "NOT projective" }
            ));
        }
        for x in 0..n {
            if r.minus(x, z).dim() == 0 {
                continue;
            }
            let module = r.minus_left_module(cat, x, z)?;
            let ok = module_projective(&alg, &module);
            passed &= ok;
            witnesses.push(format!(
                "minus({}, {}) as left module over A_{}: {}",
                cat.object_name(x),
                cat.object_name(z),
                cat.object_name(z),
                if ok { "projective" } else { "NOT projective" }
            ));
        }
    }
    Ok(ConditionReport { name: "projectivity".into(), passed, witnesses })
}

/// Condition (b): a central idempotent generating the low-degree ideal at
/// every object, with its split sequence verified.
fn idempotent_condition(
    cat: &LinCat,
    r: &ReedyStructure,
) -> Result<(ConditionReport, Vec<Option<CentralIdempotent>>)> {
    let n = cat.n_objects();
    let mut passed = true;
    let mut witnesses = Vec::new();
    let mut idems = Vec::with_capacity(n);
    for x in 0..n {
        let found = find_central_idempotent(cat, r, x)?;
        match &found {
            Some(ci) => {
                verify_split_sequence(cat, r, ci)?;
                witnesses.push(format!(
                    "{}: central idempotent found (dim I = {}), split sequence verified",
                    cat.object_name(x),
                    ci.ideal_dim
                ));
            }
            None => {
                passed = false;
                witnesses.push(format!(
                    "{}: no central idempotent is a unit of the ideal",
                    cat.object_name(x)
                ));
            }
        }
        idems.push(found);
    }
    Ok((ConditionReport { name: "central-idempotents".into(), passed, witnesses }, idems))
}

/// Condition (c): whenever `plus(y, x) ≠ 0`, the left `A_y0`-module
/// `minus(x, y)` contains a free rank-one direct summand.
fn free_summand_condition(cat: &LinCat, r: &ReedyStructure) -> Result<ConditionReport> {
    let n = cat.n_objects();
    let mut passed = true;
    let mut witnesses = Vec::new();
    for y in 0..n {
        let alg = r.local_algebra(cat, y)?;
        for x in 0..n {
            if r.plus(y, x).dim() == 0 {
                continue;
            }
            let module = r.minus_left_module(cat, x, y)?;
            let ok = module.dim() > 0 && module.free_rank_one_summand(&alg).is_some();
            passed &= ok;
            witnesses.push(format!(
                "plus({}, {}) ≠ 0: minus({}, {}) over A_{} {}",
                cat.object_name(y),
                cat.object_name(x),
                cat.object_name(x),
                cat.object_name(y),
                cat.object_name(y),
                if ok {
                    "contains a free rank-one summand"
                } else if module.dim() == 0 {
                    "is zero — no free summand"
                } else {
                    "has no free rank-one summand witness"
                }
            ));
        }
    }
    Ok(ConditionReport { name: "free-summands".into(), passed, witnesses })
}

/// The central-idempotent criterion: (a) projectivity of the raising and
/// lowering subspaces over the local algebras, (b) central idempotents
/// generating every low-degree ideal, (c) free rank-one summands in the
/// lowering modules opposite every nonzero raising space.
pub fn check_theorem_c(cat: &LinCat, r: &ReedyStructure) -> Result<DecompositionVerdict> {
    let (idem_cond, idems) = idempotent_condition(cat, r)?;
    let conditions = vec![
        projectivity_condition(cat, r)?,
        idem_cond,
        free_summand_condition(cat, r)?,
    ];
    assemble_verdict(cat, r, CriterionTag::CentralIdempotent, conditions, Some(idems))
}

/// The kernel of the nondegeneracy map at one ordered pair `(x, y)`:
/// for `over_plus`, of `g ↦ φ_g` where `φ_g(f) = [f ∘ g] ∈ A_x0`; otherwise
/// of `f ↦ ψ_f` in the other argument of the same composition pairing.
///
/// Computed by two routes that must agree: classes in the quotient
/// `A_x / i_x`, and explicit projection onto the `plus(x, x)` block of the
/// ρ-decomposition of `A_x`.
fn nondegeneracy_kernel(
    cat: &LinCat,
    r: &ReedyStructure,
    x: usize,
    y: usize,
    over_plus: bool,
) -> Result<usize> {
    let field = cat.field();
    let plus = r.plus(x, y);
    let minus = r.minus(y, x);
    let p = plus.dim();
    let q = minus.dim();
    let (vars, others) = if over_plus { (p, q) } else { (q, p) };
    if vars == 0 {
        return Ok(0);
    }
    if others == 0 {
        // The pairing lands in Hom(0, A_x0) = 0: everything is degenerate.
        return Ok(vars);
    }
    let gs: Vec<HomElt> = (0..p)
        .map(|a| HomElt { src: x, tgt: y, coeffs: plus.basis_vec(a).to_vec() })
        .collect();
    let fs: Vec<HomElt> = (0..q)
        .map(|b| HomElt { src: y, tgt: x, coeffs: minus.basis_vec(b).to_vec() })
        .collect();

    let ideal = ideal_i_x(cat, r, x)?.swap_remove(x);
    let quot = QuotientSpace::new(ideal.clone());

    // ρ-decomposition A_x = plus(x, x) ⊕ i_x as an explicit basis change.
    let local = r.plus(x, x);
    let p0 = local.dim();
    let mut basis_cols: Vec<Vec<Scalar>> =
        (0..p0).map(|i| local.basis_vec(i).to_vec()).collect();
    basis_cols.extend((0..ideal.dim()).map(|j| ideal.basis_vec(j).to_vec()));
    let b = Mat::from_cols(field, &basis_cols);
    if b.rows() != b.cols() || !b.is_invertible() {
        return Err(DecompositionError::CheckFailed(format!(
            "A_{} does not decompose as plus(x, x) ⊕ i_x",
            cat.object_name(x)
        )));
    }
    let binv = b.inverse().expect("checked invertible");
    let p_plus = Mat::from_fn(field, p0, binv.cols(), |i, j| binv[(i, j)].clone());

    let mut k1_cols: Vec<Vec<Scalar>> = vec![Vec::with_capacity(others * quot.dim()); vars];
    let mut k2_cols: Vec<Vec<Scalar>> = vec![Vec::with_capacity(others * p0); vars];
    for v in 0..vars {
        for o in 0..others {
            let (a, bb) = if over_plus { (v, o) } else { (o, v) };
            let c = cat.compose(&fs[bb], &gs[a]);
            k1_cols[v].extend(quot.project(&c.coeffs));
            k2_cols[v].extend(p_plus.mul_vec(&c.coeffs));
        }
    }
    let ker1 = Mat::from_cols(field, &k1_cols).kernel_basis();
    let ker2 = Mat::from_cols(field, &k2_cols).kernel_basis();
    let s1 = Subspace::from_spanning(field, vars, &ker1);
    let s2 = Subspace::from_spanning(field, vars, &ker2);
    if !(s1.dim() == s2.dim() && s1.is_subspace_of(&s2)) {
        return Err(DecompositionError::CheckFailed(format!(
            "nondegeneracy kernel routes disagree at ({}, {}): dims {} vs {}",
            cat.object_name(x),
            cat.object_name(y),
            s1.dim(),
            s2.dim()
        )));
    }
    Ok(s1.dim())
}

fn finiteness_condition(cat: &LinCat) -> ConditionReport {
    let total: usize = (0..cat.n_objects())
        .flat_map(|x| (0..cat.n_objects()).map(move |y| (x, y)))
        .map(|(x, y)| cat.hom_dim(x, y))
        .sum();
    ConditionReport {
        name: "finite-dimensionality".into(),
        passed: true,
        witnesses: vec![format!("all hom spaces finite dimensional (total dim {total})")],
    }
}

/// Condition (b) of the nondegeneracy criterion, or its dual: per pair,
/// projectivity of one side and an explicit free basis of the other over
/// the local algebra.  When the module checks fail but every local algebra
/// is a semisimple group algebra, the group-algebra variant applies
/// instead.
fn module_hypotheses_condition(
    cat: &LinCat,
    r: &ReedyStructure,
    dualize: bool,
) -> Result<ConditionReport> {
    let n = cat.n_objects();
    let mut per_pair = true;
    let mut witnesses = Vec::new();
    for x in 0..n {
        let alg = r.local_algebra(cat, x)?;
        for y in 0..n {
            let pd = r.plus(x, y).dim();
            let md = r.minus(y, x).dim();
            if pd == 0 && md == 0 {
                continue;
            }
            let plus_mod = r.plus_right_module(cat, x, y)?;
            let minus_mod = r.minus_left_module(cat, y, x)?;
            let (plus_ok, minus_ok, plus_req, minus_req) = if dualize {
                (
                    free_basis(&alg, &plus_mod).is_free(),
                    module_projective(&alg, &minus_mod),
                    "free",
                    "projective",
                )
            } else {
                (
                    module_projective(&alg, &plus_mod),
                    free_basis(&alg, &minus_mod).is_free(),
                    "projective",
                    "free",
                )
            };
            per_pair &= plus_ok && minus_ok;
            witnesses.push(format!(
                "pair ({}, {}): plus {} over A_{}: {}; minus {} over A_{}: {}",
                cat.object_name(x),
                cat.object_name(y),
                plus_req,
                cat.object_name(x),
                if plus_ok { "yes" } else { "NO" },
                minus_req,
                cat.object_name(x),
                if minus_ok { "yes" } else { "NO" },
            ));
        }
    }
    let mut variant = true;
    for x in 0..n {
        let alg = r.local_algebra(cat, x)?;
        variant &= group_algebra_semisimple(&alg) == Some(true);
    }
    witnesses.push(if variant {
        "group-algebra variant applicable: every local algebra is a group algebra of \
         invertible order (Maschke)"
            .into()
    } else {
        "group-algebra variant not applicable".into()
    });
    let name = if dualize { "plus-free-minus-projective" } else { "plus-projective-minus-free" };
    Ok(ConditionReport { name: name.into(), passed: per_pair || variant, witnesses })
}

/// Condition (c): `dim plus(x, y) = dim minus(y, x)` for every pair.
fn dimension_symmetry_condition(cat: &LinCat, r: &ReedyStructure) -> Result<ConditionReport> {
    let n = cat.n_objects();
    let mut passed = true;
    let mut witnesses = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let pd = r.plus(x, y).dim();
            let md = r.minus(y, x).dim();
            if pd == 0 && md == 0 {
                continue;
            }
            let ok = pd == md;
            passed &= ok;
            witnesses.push(format!(
                "dim plus({}, {}) = {}, dim minus({}, {}) = {}{}",
                cat.object_name(x),
                cat.object_name(y),
                pd,
                cat.object_name(y),
                cat.object_name(x),
                md,
                if ok { "" } else { " — MISMATCH" }
            ));
        }
    }
    Ok(ConditionReport { name: "dimension-symmetry".into(), passed, witnesses })
}

/// Condition (d) (`over_plus`) or (d′): vanishing of the nondegeneracy
/// kernel at every pair with a nonzero raising (resp. lowering) space.
fn nondegeneracy_condition(
    cat: &LinCat,
    r: &ReedyStructure,
    over_plus: bool,
) -> Result<ConditionReport> {
    let n = cat.n_objects();
    let mut passed = true;
    let mut witnesses = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let active = if over_plus { r.plus(x, y).dim() } else { r.minus(y, x).dim() };
            if active == 0 {
                continue;
            }
            let k = nondegeneracy_kernel(cat, r, x, y, over_plus)?;
            let ok = k == 0;
            passed &= ok;
            witnesses.push(format!(
                "pair ({}, {}): kernel of {} has dimension {}",
                cat.object_name(x),
                cat.object_name(y),
                if over_plus { "g ↦ φ_g" } else { "f ↦ ψ_f" },
                k
            ));
        }
    }
    Ok(ConditionReport { name: "nondegeneracy".into(), passed, witnesses })
}

/// The nondegeneracy criterion: (a) finite dimensionality, (b) plus
/// projective and minus free over the local algebras (or the group-algebra
/// variant), (c) symmetric dimensions, (d) every nonzero raising morphism
/// non-degenerate.
pub fn check_theorem_d(cat: &LinCat, r: &ReedyStructure) -> Result<DecompositionVerdict> {
    let conditions = vec![
        finiteness_condition(cat),
        module_hypotheses_condition(cat, r, false)?,
        dimension_symmetry_condition(cat, r)?,
        nondegeneracy_condition(cat, r, true)?,
    ];
    assemble_verdict(cat, r, CriterionTag::Nondegenerate, conditions, None)
}

/// The dual nondegeneracy criterion: plus free and minus projective, with
/// every nonzero lowering morphism non-degenerate.
pub fn check_theorem_d_dual(cat: &LinCat, r: &ReedyStructure) -> Result<DecompositionVerdict> {
    let conditions = vec![
        finiteness_condition(cat),
        module_hypotheses_condition(cat, r, true)?,
        dimension_symmetry_condition(cat, r)?,
        nondegeneracy_condition(cat, r, false)?,
    ];
    assemble_verdict(cat, r, CriterionTag::Nondegenerate, conditions, None)
}
