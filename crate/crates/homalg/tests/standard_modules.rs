//! Standard and costandard modules over the category of finite sets of size
//! at most two: endomorphism algebras, hom/ext vanishing governed by
//! degrees, and reconstruction by induction from the local algebras.

use homalg::{ext1, induce_minus, MinusModule};
use lincat_core::{dim_hom_reps, hom_reps, RepMap, Side};
use reedy::standard_module;
use scalar_linalg::{Field, Mat, Scalar};
use zoo::fin_all;

fn q() -> Field {
    Field::Rational
}

/// Reads an endomorphism of the standard module at `x` off as an element of
/// the local algebra, using the isomorphism `Delta_x(x) = A_x` furnished by
/// the quotient projection.
struct EndoReader {
    j_inv: Mat,
    j_one: Vec<Scalar>,
}

impl EndoReader {
    fn new(inst: &zoo::Instance, x: usize) -> (EndoReader, lincat_core::Algebra) {
        let cat = &inst.cat;
        let alg = inst.reedy.local_algebra(cat, x).unwrap();
        let sub = inst.reedy.plus(x, x);
        let cols: Vec<Vec<Scalar>> = (0..sub.dim()).map(|i| sub.basis_vec(i).to_vec()).collect();
        let basis = Mat::from_cols(cat.field(), &cols);
        let (_, proj) = standard_module(cat, &inst.reedy, x, Side::Left).unwrap();
        let j = proj.comps[x].mul(&basis);
        assert!(j.is_invertible(), "Delta_x(x) must be the local algebra");
        let j_inv = j.inverse().unwrap();
        let j_one = j.mul_vec(alg.one());
        (EndoReader { j_inv, j_one }, alg)
    }

    fn read(&self, u: &RepMap, x: usize) -> Vec<Scalar> {
        self.j_inv.mul_vec(&u.comps[x].mul_vec(&self.j_one))
    }
}

#[test]
fn endomorphism_algebras_match_the_local_algebras() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let mut dims = Vec::new();
    for x in 0..cat.n_objects() {
        let (delta, _) = standard_module(cat, &inst.reedy, x, Side::Left).unwrap();
        let local = inst.reedy.local_algebra(cat, x).unwrap();
        let end_dim = dim_hom_reps(cat, &delta, &delta);
        assert_eq!(end_dim, local.dim(), "object {x}");
        dims.push(end_dim);
    }
    assert_eq!(dims, vec![1, 1, 2]);
}

#[test]
fn evaluation_at_x_is_an_anti_isomorphism_onto_the_local_algebra() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    for x in 0..cat.n_objects() {
        let (reader, alg) = EndoReader::new(&inst, x);
        let (delta, _) = standard_module(cat, &inst.reedy, x, Side::Left).unwrap();
        let endos = hom_reps(cat, &delta, &delta);
        assert_eq!(endos.len(), alg.dim());

        // The reading map is bijective ...
        let cols: Vec<Vec<Scalar>> = endos.iter().map(|u| reader.read(u, x)).collect();
        assert!(Mat::from_cols(q(), &cols).is_invertible());

        // ... and reverses products: reading u after v multiplies the other
        // way around in the local algebra.
        for u in &endos {
            for v in &endos {
                let uv = u.compose(v);
                let lhs = reader.read(&uv, x);
                let rhs = alg.mul_elts(&reader.read(v, x), &reader.read(u, x));
                assert_eq!(lhs, rhs, "object {x}");
            }
        }
        // Sanity: the identity endomorphism reads as the unit.
        let id = RepMap::identity(&delta);
        assert_eq!(reader.read(&id, x), alg.one().to_vec());
    }
}

#[test]
fn homs_between_standard_modules_respect_degrees() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let deltas: Vec<_> = (0..cat.n_objects())
        .map(|x| standard_module(cat, &inst.reedy, x, Side::Left).unwrap().0)
        .collect();
    for x in 0..cat.n_objects() {
        for y in 0..cat.n_objects() {
            let d = dim_hom_reps(cat, &deltas[x], &deltas[y]);
            if x != y && inst.reedy.degree(x) <= inst.reedy.degree(y) {
                assert_eq!(d, 0, "hom from {x} to {y} must vanish");
            }
            if d != 0 {
                assert!(x == y || inst.reedy.degree(x) > inst.reedy.degree(y));
            }
        }
    }
}

#[test]
fn ext_between_standard_modules_respects_degrees() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let deltas: Vec<_> = (0..cat.n_objects())
        .map(|x| standard_module(cat, &inst.reedy, x, Side::Left).unwrap().0)
        .collect();
    for x in 0..cat.n_objects() {
        for y in 0..cat.n_objects() {
            let e = ext1(cat, &deltas[x], &deltas[y]).unwrap().dim;
            if inst.reedy.degree(x) <= inst.reedy.degree(y) {
                assert_eq!(e, 0, "ext from {x} to {y} must vanish");
            }
        }
    }
}

#[test]
fn costandard_modules_satisfy_the_dual_statements() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let nablas: Vec<_> = (0..cat.n_objects())
        .map(|x| standard_module(cat, &inst.reedy, x, Side::Right).unwrap().0)
        .collect();
    for x in 0..cat.n_objects() {
        let local = inst.reedy.local_algebra(cat, x).unwrap();
        assert_eq!(dim_hom_reps(cat, &nablas[x], &nablas[x]), local.dim());
    }
    for x in 0..cat.n_objects() {
        for y in 0..cat.n_objects() {
            let d = dim_hom_reps(cat, &nablas[x], &nablas[y]);
            if x != y && inst.reedy.degree(x) <= inst.reedy.degree(y) {
                assert_eq!(d, 0, "dual hom from {x} to {y} must vanish");
            }
            let e = ext1(cat, &nablas[x], &nablas[y]).unwrap().dim;
            if inst.reedy.degree(x) <= inst.reedy.degree(y) {
                assert_eq!(e, 0, "dual ext from {x} to {y} must vanish");
            }
        }
    }
}

#[test]
fn induction_from_the_local_algebra_recovers_the_standard_module() {
    for inst in [fin_all(2, q()).unwrap(), zoo::cyclic(2, q()).unwrap()] {
        let cat = &inst.cat;
        for x in 0..cat.n_objects() {
            let v = MinusModule::local_algebra_at(cat, &inst.reedy, x).unwrap();
            let ind = induce_minus(cat, &inst.reedy, &v).unwrap();
            let (delta, _) = standard_module(cat, &inst.reedy, x, Side::Left).unwrap();
            assert_eq!(ind.dims(), delta.dims(), "{}: object {x}", inst.name);

            // Some combination of hom basis vectors is an isomorphism.
            let basis = hom_reps(cat, &ind, &delta);
            let mut candidates: Vec<RepMap> = basis.to_vec();
            let mut acc: Option<RepMap> = None;
            for (i, u) in basis.iter().enumerate() {
                let w = u.scale(&Scalar::from_i64(q(), i as i64 + 1));
                acc = Some(match acc {
                    None => w,
                    Some(a) => a.add(&w),
                });
                candidates.push(acc.clone().unwrap());
            }
            assert!(
                candidates.iter().any(|u| u.is_iso()),
                "{}: no isomorphism onto the standard module at {x}",
                inst.name
            );
        }
    }
}
