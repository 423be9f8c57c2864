//! Counting irreducible modules objectwise.
//!
//! Irreducible modules of the category are parameterized by pairs of an
//! object `x` and an isomorphism class of simple modules over the local
//! degree-0 algebra at `x`, so the count reduces to counting simples of
//! small semisimple algebras.  Two families are supported exactly:
//! dimension-one algebras, and group algebras `kG` with `char k` not
//! dividing `|G|` (semisimple by Maschke's theorem).  Over Q the number of
//! simples of `QG` is the number of conjugacy classes of cyclic subgroups
//! (the Berman-Witt count); over `F_p` it is the number of orbits of
//! conjugacy classes under `g -> g^p`.

use crate::error::{HomalgError, Result};
use lincat_core::{GroupBasis, LinCat};
use reedy::ReedyStructure;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct IrreducibleCount {
    pub per_object: Vec<usize>,
    pub total: usize,
    /// One human-readable line per object explaining the route taken.
    pub certificates: Vec<String>,
}

fn power(gb: &GroupBasis, g: usize, e: u64) -> usize {
    let mut acc = gb.identity;
    for _ in 0..e {
        acc = gb.table[acc][g];
    }
    acc
}

fn conjugate(gb: &GroupBasis, u: usize, g: usize) -> usize {
    gb.table[gb.table[u][g]][gb.inverse[u]]
}

fn conjugacy_classes(gb: &GroupBasis) -> Vec<Vec<usize>> {
    let n = gb.table.len();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|u| conjugate(gb, u, g)).collect();
        for &h in &class {
            seen[h] = true;
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

fn cyclic_subgroup(gb: &GroupBasis, g: usize) -> BTreeSet<usize> {
    let mut sub = BTreeSet::new();
    let mut acc = gb.identity;
    loop {
        if !sub.insert(acc) {
            break;
        }
        acc = gb.table[acc][g];
    }
    sub
}

/// Number of conjugacy classes of cyclic subgroups.
fn count_rational(gb: &GroupBasis) -> usize {
    let n = gb.table.len();
    let subgroups: BTreeSet<BTreeSet<usize>> =
        (0..n).map(|g| cyclic_subgroup(gb, g)).collect();
    let list: Vec<BTreeSet<usize>> = subgroups.into_iter().collect();
    let mut assigned = vec![false; list.len()];
    let mut orbits = 0usize;
    for i in 0..list.len() {
        if assigned[i] {
            continue;
        }
        orbits += 1;
        for u in 0..n {
            let image: BTreeSet<usize> =
                list[i].iter().map(|&g| conjugate(gb, u, g)).collect();
            if let Some(j) = list.iter().position(|s| *s == image) {
                assigned[j] = true;
            }
        }
    }
    orbits
}

/// Number of orbits of conjugacy classes under the `p`-power map.
fn count_mod_p(gb: &GroupBasis, p: u64) -> usize {
    let classes = conjugacy_classes(gb);
    let class_of = |g: usize| classes.iter().position(|c| c.contains(&g)).unwrap();
    let image: Vec<usize> = classes
        .iter()
        .map(|c| {
            let ord = cyclic_subgroup(gb, c[0]).len() as u64;
            class_of(power(gb, c[0], p % ord))
        })
        .collect();
    // Union the cycles of the induced permutation on classes.
    let mut assigned = vec![false; classes.len()];
    let mut orbits = 0usize;
    for mut i in 0..classes.len() {
        if assigned[i] {
            continue;
        }
        orbits += 1;
        while !assigned[i] {
            assigned[i] = true;
            i = image[i];
        }
    }
    orbits
}

pub fn count_irreducibles(cat: &LinCat, r: &ReedyStructure) -> Result<IrreducibleCount> {
    let p = cat.field().characteristic();
    let mut per_object = Vec::new();
    let mut certificates = Vec::new();
    for x in 0..cat.n_objects() {
        let name = cat.object_name(x);
        let alg = r.local_algebra(cat, x)?;
        if alg.dim() == 1 {
            per_object.push(1);
            certificates.push(format!("{name}: local algebra of dimension 1, one simple"));
            continue;
        }
        let Some(gb) = alg.group_basis() else {
            return Err(HomalgError::NotSemisimpleUnsupported(format!(
                "local algebra at {name} (dimension {}) is not a group algebra on \
                 its canonical basis; only dimension-one and group-algebra local \
                 algebras are supported",
                alg.dim()
            )));
        };
        let order = gb.table.len() as u64;
        if p == 0 {
            if alg.trace_form_radical().dim() != 0 {
                return Err(HomalgError::CheckFailed(format!(
                    "group algebra at {name} has a nonzero trace-form radical in \
                     characteristic zero"
                )));
            }
            let count = count_rational(&gb);
            per_object.push(count);
            certificates.push(format!(
                "{name}: rational group algebra of order {order}; {count} conjugacy \
                 classes of cyclic subgroups"
            ));
        } else {
            if order % p == 0 {
                return Err(HomalgError::NotSemisimpleUnsupported(format!(
                    "group algebra at {name} has order {order} divisible by the \
                     characteristic {p}"
                )));
            }
            let count = count_mod_p(&gb, p);
            per_object.push(count);
            certificates.push(format!(
                "{name}: group algebra of order {order} over F_{p} (coprime, so \
                 semisimple); {count} orbits of conjugacy classes under the \
                 {p}-power map"
            ));
        }
    }
    let total = per_object.iter().sum();
    Ok(IrreducibleCount { per_object, total, certificates })
}
