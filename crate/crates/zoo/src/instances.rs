//! Built-in desk-scale category instances.
//!
//! Every builder returns an [`Instance`]: the set-level category, its
//! linearization over the requested coefficient field, and the Reedy
//! structure (degree function plus the two wide subcategory families).
//! Parameters are bounded so that every hom space stays small enough for
//! exhaustive checking; out-of-range requests fail with
//! `PARAM_OUT_OF_RANGE` rather than silently truncating.

use crate::error::{Result, ZooError};
use lincat_core::{CMor, ConcreteCat, ConcreteCatBuilder, LinCat};
use reedy::ReedyStructure;
use scalar_linalg::Field;

/// A named category together with its linearization and Reedy designations.
pub struct Instance {
    /// `name:params` tag, e.g. `fin_all:2`.
    pub name: String,
    pub concrete: ConcreteCat,
    pub cat: LinCat,
    pub reedy: ReedyStructure,
}

fn check_bound(what: &str, val: usize, max: usize) -> Result<()> {
    if val > max {
        return Err(ZooError::ParamOutOfRange(format!(
            "{what} = {val} exceeds the supported bound {max}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Finite sets [0], [1], ..., [n] with function classes.
// ---------------------------------------------------------------------------

fn all_functions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for shorter in all_functions(m - 1, k) {
        for v in 0..k {
            let mut f = shorter.clone();
            f.push(v);
            out.push(f);
        }
    }
    out
}

fn is_injective(func: &[usize]) -> bool {
    for i in 0..func.len() {
        for j in (i + 1)..func.len() {
            if func[i] == func[j] {
                return false;
            }
        }
    }
    true
}

fn is_surjective(func: &[usize], tgt_size: usize) -> bool {
    (0..tgt_size).all(|v| func.contains(&v))
}

fn is_strictly_increasing(func: &[usize]) -> bool {
    func.windows(2).all(|w| w[0] < w[1])
}

fn func_name(func: &[usize]) -> String {
    let mut s = String::from("f");
    for v in func {
        s.push_str(&(v + 1).to_string());
    }
    s
}

/// Objects `[lo] .. [n]`, morphisms the functions accepted by `filter`
/// (which also sees the target size).
fn build_sets_with_target(
    lo: usize,
    n: usize,
    filter: impl Fn(&[usize], usize) -> bool,
) -> Result<ConcreteCat> {
    let mut b = ConcreteCatBuilder::new();
    for m in lo..=n {
        let carrier: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        b.add_object(&format!("[{m}]"), Some(carrier));
    }
    for m in lo..=n {
        for k in lo..=n {
            for func in all_functions(m, k) {
                if filter(&func, k) {
                    b.add_morphism(m - lo, k - lo, &func_name(&func), Some(func))?;
                }
            }
        }
    }
    Ok(b.build()?)
}

/// Objects `[lo] .. [n]`, morphisms the functions accepted by `filter`.
fn build_sets(lo: usize, n: usize, filter: impl Fn(&[usize]) -> bool) -> Result<ConcreteCat> {
    build_sets_with_target(lo, n, |f, _| filter(f))
}

/// Installs degree = carrier size, plus = injective functions, minus =
/// surjective functions on a function-backed category.
fn sets_reedy(c: &ConcreteCat, field: Field, name: String) -> Result<Instance> {
    let cat = LinCat::linearize(c, field);
    let degree: Vec<u32> = (0..c.n_objects())
        .map(|x| c.carrier(x).unwrap().len() as u32)
        .collect();
    let func = |m: lincat_core::MorId| {
        c.mor_func(CMor { src: m.src, tgt: m.tgt, idx: m.idx }).unwrap()
    };
    let r = ReedyStructure::from_basis_morphisms(
        &cat,
        degree,
        |m| is_injective(func(m)),
        |m| is_surjective(func(m), c.carrier(m.tgt).unwrap().len()),
    )?;
    Ok(Instance { name, concrete: c.clone(), cat, reedy: r })
}

/// Finite sets `[0] .. [n]` with all functions; plus = injections, minus =
/// surjections.
pub fn fin_all(n: usize, field: Field) -> Result<Instance> {
    check_bound("fin_all size", n, 3)?;
    let c = build_sets(0, n, |_| true)?;
    sets_reedy(&c, field, format!("fin_all:{n}"))
}

/// Finite sets with injections only; a direct category (minus = bijections =
/// endomorphisms).
pub fn fin_inj(n: usize, field: Field) -> Result<Instance> {
    check_bound("fin_inj size", n, 3)?;
    let c = build_sets(0, n, is_injective)?;
    sets_reedy(&c, field, format!("fin_inj:{n}"))
}

/// Finite sets with surjections only; an inverse category (plus =
/// bijections = endomorphisms).
pub fn fin_surj(n: usize, field: Field) -> Result<Instance> {
    check_bound("fin_surj size", n, 3)?;
    let c = build_sets_with_target(0, n, |f, tgt_size| is_surjective(f, tgt_size))?;
    sets_reedy(&c, field, format!("fin_surj:{n}"))
}

/// Truncated semisimplicial shapes: sets `[0] .. [n]` with order-preserving
/// injections (strictly increasing functions); a direct category.
pub fn delta_plus(n: usize, field: Field) -> Result<Instance> {
    check_bound("delta_plus size", n, 3)?;
    let c = build_sets(0, n, is_strictly_increasing)?;
    sets_reedy(&c, field, format!("delta_plus:{n}"))
}

// ---------------------------------------------------------------------------
// Cyclic truncation.
// ---------------------------------------------------------------------------

/// A map between cyclically ordered sets is cyclic order preserving exactly
/// when the total of the cyclic jumps `(f(i+1) - f(i)) mod k` around the
/// source is `0` (constants) or `k` (maps winding once).  Larger totals wind
/// more than once and reverse triples of the cyclic order.
fn winding_ok(func: &[usize], k: usize) -> bool {
    let m = func.len();
    let mut total = 0usize;
    for i in 0..m {
        let a = func[i];
        let b = func[(i + 1) % m];
        total += (b + k - a) % k;
    }
    total <= k
}

/// Cyclically ordered sets `[1] .. [n]` with cyclic order preserving maps.
/// The automorphisms of `[m]` are the `m` rotations, so the local algebras
/// are the cyclic group algebras `k C_m`.
pub fn cyclic(n: usize, field: Field) -> Result<Instance> {
    if n == 0 {
        return Err(ZooError::ParamOutOfRange(
            "cyclic truncation needs at least one object".into(),
        ));
    }
    check_bound("cyclic size", n, 3)?;
    let c = build_sets_with_target(1, n, |f, k| winding_ok(f, k))?;
    sets_reedy(&c, field, format!("cyclic:{n}"))
}

// ---------------------------------------------------------------------------
// Finite vector spaces over F_q.
// ---------------------------------------------------------------------------

/// Digits of `v` base `q`, length `m` (coefficient of the i-th basis vector
/// at position i).
fn digits(v: usize, q: usize, m: usize) -> Vec<usize> {
    let mut d = Vec::with_capacity(m);
    let mut v = v;
    for _ in 0..m {
        d.push(v % q);
        v /= q;
    }
    d
}

/// The spaces F_q^0, ..., F_q^n with all linear maps, function-backed on
/// their element sets.  Degree = dimension, plus = injective linear maps,
/// minus = surjective linear maps; the local algebras are the group algebras
/// of GL_m(F_q).
pub fn vect_fq(q: usize, n: usize, field: Field) -> Result<Instance> {
    if !(q == 2 || q == 3) {
        return Err(ZooError::ParamOutOfRange(format!(
            "vect_fq supports q in {{2, 3}}, got {q}"
        )));
    }
    check_bound("vect_fq dimension", n, 2)?;
    let mut b = ConcreteCatBuilder::new();
    for m in 0..=n {
        let size = q.pow(m as u32);
        let carrier: Vec<String> = (0..size)
            .map(|v| {
                let ds: String = digits(v, q, m).iter().map(|d| d.to_string()).collect();
                format!("v{ds}")
            })
            .collect();
        b.add_object(&format!("F{q}^{m}"), Some(carrier));
    }
    for m in 0..=n {
        for k in 0..=n {
            // A linear map is a tuple of column vectors in F_q^k, one per
            // basis vector of F_q^m.
            let tgt_size = q.pow(k as u32);
            let n_maps = tgt_size.pow(m as u32);
            for code in 0..n_maps {
                let cols = digits(code, tgt_size, m);
                let func: Vec<usize> = (0..q.pow(m as u32))
                    .map(|v| {
                        let coeffs = digits(v, q, m);
                        let mut image = vec![0usize; k];
                        for (i, &c) in coeffs.iter().enumerate() {
                            let col = digits(cols[i], q, k);
                            for j in 0..k {
                                image[j] = (image[j] + c * col[j]) % q;
                            }
                        }
                        image
                            .iter()
                            .enumerate()
                            .map(|(j, &d)| d * q.pow(j as u32))
                            .sum()
                    })
                    .collect();
                let label = format!(
                    "m{}",
                    cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_")
                );
                b.add_morphism(m, k, &label, Some(func))?;
            }
        }
    }
    let c = b.build()?;
    let cat = LinCat::linearize(&c, field);
    let degree: Vec<u32> = (0..=n as u32).collect();
    let func = |m: lincat_core::MorId| {
        c.mor_func(CMor { src: m.src, tgt: m.tgt, idx: m.idx }).unwrap()
    };
    let r = ReedyStructure::from_basis_morphisms(
        &cat,
        degree,
        |m| is_injective(func(m)),
        |m| is_surjective(func(m), c.carrier(m.tgt).unwrap().len()),
    )?;
    Ok(Instance {
        name: format!("vect_fq:{q}:{n}"),
        concrete: c,
        cat,
        reedy: r,
    })
}

// ---------------------------------------------------------------------------
// Posets and quivers.
// ---------------------------------------------------------------------------

/// The chain poset `p0 < p1 < ... < pn` as a category with one morphism per
/// comparable pair, carrier-backed by nested sets `{1..i}` so that pullbacks
/// of the inclusions are intersections (the poset has all meets).  A direct
/// category: degree = height, plus = everything, minus = identities.
pub fn poset_chain_meets(n: usize, field: Field) -> Result<Instance> {
    check_bound("poset chain height", n, 3)?;
    let mut b = ConcreteCatBuilder::new();
    for i in 0..=n {
        let carrier: Vec<String> = (1..=i).map(|t| t.to_string()).collect();
        b.add_object(&format!("p{i}"), Some(carrier));
    }
    for i in 0..=n {
        for j in i..=n {
            let func: Vec<usize> = (0..i).collect();
            let label = if i == j { format!("id{i}") } else { format!("u{i}_{j}") };
            b.add_morphism(i, j, &label, Some(func))?;
        }
    }
    let c = b.build()?;
    let cat = LinCat::linearize(&c, field);
    let degree: Vec<u32> = (0..=n as u32).collect();
    let r = ReedyStructure::from_basis_morphisms(&cat, degree, |_| true, |m| m.src == m.tgt)?;
    Ok(Instance {
        name: format!("poset_chain_meets:{n}"),
        concrete: c,
        cat,
        reedy: r,
    })
}

fn quiver_concrete() -> Result<ConcreteCat> {
    let mut b = ConcreteCatBuilder::new();
    let a = b.add_object("a", None);
    let bb = b.add_object("b", None);
    let ida = b.add_morphism(a, a, "id_a", None)?;
    let idb = b.add_morphism(bb, bb, "id_b", None)?;
    let f = b.add_morphism(a, bb, "f", None)?;
    b.set_identity(a, ida);
    b.set_identity(bb, idb);
    b.set_composite(ida, ida, ida);
    b.set_composite(idb, idb, idb);
    b.set_composite(f, ida, f);
    b.set_composite(idb, f, f);
    Ok(b.build()?)
}

/// The quiver `a -> b` as a direct category: `d(a) = 0 < d(b) = 1`, plus =
/// everything, minus = identities.
pub fn quiver_ab(field: Field) -> Result<Instance> {
    let c = quiver_concrete()?;
    let cat = LinCat::linearize(&c, field);
    let r = ReedyStructure::from_basis_morphisms(&cat, vec![0, 1], |_| true, |m| m.src == m.tgt)?;
    Ok(Instance { name: "quiver_ab".into(), concrete: c, cat, reedy: r })
}

/// The same quiver `a -> b` viewed as an inverse category: `d(a) = 1 > d(b)
/// = 0`, minus = everything, plus = identities.
pub fn quiver_ab_op(field: Field) -> Result<Instance> {
    let c = quiver_concrete()?;
    let cat = LinCat::linearize(&c, field);
    let r = ReedyStructure::from_basis_morphisms(&cat, vec![1, 0], |m| m.src == m.tgt, |_| true)?;
    Ok(Instance { name: "quiver_ab_op".into(), concrete: c, cat, reedy: r })
}

/// The one-object category whose endomorphism algebra is `k[t]/(t^2)`:
/// basis `{1, t}` with `t^2 = 0`.  Not a Reedy instance by itself (the local
/// algebra is not semisimple); used as a degree-0 building block.
pub fn dual_numbers(field: Field) -> Result<Instance> {
    use std::collections::HashMap;

    let objects = vec!["*".to_string()];
    let basis = vec![vec![vec!["one".to_string(), "t".to_string()]]];
    let id_coeffs = vec![vec![field.one(), field.zero()]];
    let mid = |idx: usize| lincat_core::MorId { src: 0, tgt: 0, idx };
    let mut comp = HashMap::new();
    comp.insert((mid(0), mid(0)), vec![field.one(), field.zero()]);
    comp.insert((mid(0), mid(1)), vec![field.zero(), field.one()]);
    comp.insert((mid(1), mid(0)), vec![field.zero(), field.one()]);
    comp.insert((mid(1), mid(1)), vec![field.zero(), field.zero()]);
    let cat = LinCat::new(field, objects, basis, id_coeffs, comp)?;
    // As a Reedy structure the whole endomorphism space sits in both wide
    // subcategories at the single object.
    let r = ReedyStructure::from_basis_morphisms(&cat, vec![0], |_| true, |_| true)?;
    // There is no underlying set-level category (t is not a function), so the
    // concrete field carries a placeholder one-morphism category.
    let mut b = ConcreteCatBuilder::new();
    let x = b.add_object("*", None);
    let id = b.add_morphism(x, x, "id", None)?;
    b.set_identity(x, id);
    b.set_composite(id, id, id);
    let c = b.build()?;
    Ok(Instance { name: "dual_numbers".into(), concrete: c, cat, reedy: r })
}
