//! Small category fixtures for unit tests: finite sets with all functions,
//! or with injections only.

use crate::structure::ReedyStructure;
use lincat_core::{ConcreteCat, ConcreteCatBuilder, LinCat};
use scalar_linalg::Field;

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

pub fn is_injective(func: &[usize]) -> bool {
    for i in 0..func.len() {
        for j in (i + 1)..func.len() {
            if func[i] == func[j] {
                return false;
            }
        }
    }
    true
}

pub fn is_surjective(func: &[usize], tgt_size: usize) -> bool {
    (0..tgt_size).all(|v| func.contains(&v))
}

fn func_name(func: &[usize]) -> String {
    let mut s = String::from("f");
    for v in func {
        s.push_str(&(v + 1).to_string());
    }
    s
}

fn build(n: usize, filter: impl Fn(&[usize]) -> bool) -> ConcreteCat {
    let mut b = ConcreteCatBuilder::new();
    for m in 0..=n {
        let carrier: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        b.add_object(&format!("[{m}]"), Some(carrier));
    }
    for m in 0..=n {
        for k in 0..=n {
            for func in all_functions(m, k) {
                if filter(&func) {
                    b.add_morphism(m, k, &func_name(&func), Some(func)).unwrap();
                }
            }
        }
    }
    b.build().unwrap()
}

/// Objects `[0] .. [n]`, all functions.
pub fn fin_all(n: usize) -> ConcreteCat {
    build(n, |_| true)
}

/// Objects `[0] .. [n]`, injections only.
pub fn fin_inj(n: usize) -> ConcreteCat {
    build(n, is_injective)
}

/// Linearizes and installs the Reedy structure with degree = cardinality,
/// plus = injections, minus = surjections.
pub fn with_reedy(c: &ConcreteCat, field: Field) -> (LinCat, ReedyStructure) {
    let cat = LinCat::linearize(c, field);
    let degree: Vec<u32> = (0..c.n_objects())
        .map(|x| c.carrier(x).unwrap().len() as u32)
        .collect();
    let r = ReedyStructure::from_basis_morphisms(
        &cat,
        degree,
        |m| {
            let func = c
                .mor_func(lincat_core::CMor { src: m.src, tgt: m.tgt, idx: m.idx })
                .unwrap();
            is_injective(func)
        },
        |m| {
            let func = c
                .mor_func(lincat_core::CMor { src: m.src, tgt: m.tgt, idx: m.idx })
                .unwrap();
            is_surjective(func, c.carrier(m.tgt).unwrap().len())
        },
    )
    .unwrap();
    (cat, r)
}
