use crate::freeness::{free_basis, group_algebra_semisimple, FreenessVerdict};
use crate::idempotent::{find_central_idempotent, verify_split_sequence};
use crate::standard_tensor::standard_tensor;
use lincat_core::{Algebra, AlgMod, Side};
use scalar_linalg::{Field, Mat, Scalar};

fn group_algebra_c2(field: Field) -> Algebra {
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let e = |k: usize| {
        let mut v = vec![zero.clone(), zero.clone()];
        v[k] = one.clone();
        v
    };
    let mul = vec![vec![e(0), e(1)], vec![e(1), e(0)]];
    Algebra::new(field, mul, e(0)).unwrap()
}

#[test]
fn regular_module_is_free_of_rank_one() {
    let alg = group_algebra_c2(Field::Rational);
    let reg = AlgMod::regular(&alg, Side::Left);
    match free_basis(&alg, &reg) {
        FreenessVerdict::Free { rank, generators } => {
            assert_eq!(rank, 1);
            assert_eq!(generators.len(), 1);
        }
        other => panic!("expected free verdict, got {other:?}"),
    }
}

#[test]
fn trivial_module_dimension_fast_fail() {
    let alg = group_algebra_c2(Field::Rational);
    let field = alg.field();
    let id1 = Mat::identity(field, 1);
    let triv = AlgMod::new(&alg, Side::Left, 1, vec![id1.clone(), id1]).unwrap();
    assert_eq!(
        free_basis(&alg, &triv),
        FreenessVerdict::NotMultiple { module_dim: 1, algebra_dim: 2 }
    );
}

#[test]
fn double_trivial_module_has_no_free_basis_but_is_projective() {
    let alg = group_algebra_c2(Field::Rational);
    let field = alg.field();
    let id2 = Mat::identity(field, 2);
    let m = AlgMod::new(&alg, Side::Left, 2, vec![id2.clone(), id2]).unwrap();
    assert_eq!(free_basis(&alg, &m), FreenessVerdict::NoWitness);
    // Maschke: over the rationals the group algebra is semisimple, so the
    // module is still projective despite not being free.
    assert!(m.is_projective(&alg));
}

#[test]
fn group_algebra_semisimplicity_gate() {
    let rational = group_algebra_c2(Field::Rational);
    assert_eq!(group_algebra_semisimple(&rational), Some(true));
    let f2 = Field::prime(2).unwrap();
    let modular = group_algebra_c2(f2);
    assert_eq!(group_algebra_semisimple(&modular), Some(false));
    let dual = zoo::dual_numbers(Field::Rational).unwrap();
    let local = dual.reedy.local_algebra(&dual.cat, 0).unwrap();
    assert_eq!(group_algebra_semisimple(&local), None);
}

#[test]
fn dual_numbers_regular_module_is_free() {
    let inst = zoo::dual_numbers(Field::Rational).unwrap();
    let alg = inst.reedy.local_algebra(&inst.cat, 0).unwrap();
    assert_eq!(alg.dim(), 2);
    let reg = AlgMod::regular(&alg, Side::Right);
    match free_basis(&alg, &reg) {
        FreenessVerdict::Free { rank, .. } => assert_eq!(rank, 1),
        other => panic!("expected free verdict, got {other:?}"),
    }
}

#[test]
fn zero_module_is_free_of_rank_zero() {
    let alg = group_algebra_c2(Field::Rational);
    let z = AlgMod::zero(&alg, Side::Left);
    match free_basis(&alg, &z) {
        FreenessVerdict::Free { rank, generators } => {
            assert_eq!(rank, 0);
            assert!(generators.is_empty());
        }
        other => panic!("expected free verdict, got {other:?}"),
    }
}

#[test]
fn linear_maps_over_f3_lowering_module_is_free_rank_four() {
    let inst = zoo::vect_fq(3, 2, Field::Rational).unwrap();
    let (cat, r) = (&inst.cat, &inst.reedy);
    // The unit group of F_3 acts freely on the 8 nonzero functionals
    // F_3^2 -> F_3 by postcomposition: 4 orbits of size 2.
    let alg = r.local_algebra(cat, 1).unwrap();
    assert_eq!(alg.dim(), 2);
    let m = r.minus_left_module(cat, 2, 1).unwrap();
    assert_eq!(m.dim(), 8);
    match free_basis(&alg, &m) {
        FreenessVerdict::Free { rank, .. } => assert_eq!(rank, 4),
        other => panic!("expected free verdict, got {other:?}"),
    }
}

#[test]
fn linear_maps_over_f3_top_raising_module_is_regular() {
    let inst = zoo::vect_fq(3, 2, Field::Rational).unwrap();
    let (cat, r) = (&inst.cat, &inst.reedy);
    let alg = r.local_algebra(cat, 2).unwrap();
    assert_eq!(alg.dim(), 48);
    let m = r.plus_right_module(cat, 2, 2).unwrap();
    match free_basis(&alg, &m) {
        FreenessVerdict::Free { rank, .. } => assert_eq!(rank, 1),
        other => panic!("expected free verdict, got {other:?}"),
    }
}

#[test]
fn dual_numbers_idempotent_is_trivial() {
    let inst = zoo::dual_numbers(Field::Rational).unwrap();
    let (cat, r) = (&inst.cat, &inst.reedy);
    let ci = find_central_idempotent(cat, r, 0).unwrap().expect("zero ideal has unit 0");
    assert_eq!(ci.ideal_dim, 0);
    assert!(ci.e.coeffs.iter().all(Scalar::is_zero));
    assert_eq!(ci.f.coeffs, cat.identity(0).coeffs);
    verify_split_sequence(cat, r, &ci).unwrap();
}

#[test]
fn standard_tensor_with_regular_coefficients_has_delta_dims() {
    let inst = zoo::fin_all(2, Field::Rational).unwrap();
    let (cat, r) = (&inst.cat, &inst.reedy);
    let alg = r.local_algebra(cat, 1).unwrap();
    let reg = AlgMod::regular(&alg, Side::Left);
    let st = standard_tensor(cat, r, 1, &reg).unwrap();
    // Tensoring with the regular module changes nothing: the result has the
    // dimensions of the standard module at [1].
    assert_eq!(st.rep.dims(), st.delta.dims());
    assert_eq!(st.delta.dims(), &[0, 1, 2]);
}
