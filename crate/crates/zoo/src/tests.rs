use crate::*;
use lincat_core::Side;
use reedy::check_reedy;
use scalar_linalg::Field;

fn q() -> Field {
    Field::Rational
}

#[test]
fn fin_all_hom_dimensions() {
    let inst = fin_all(2, q()).unwrap();
    let c = &inst.cat;
    assert_eq!(c.n_objects(), 3);
    let x2 = c.object_index("[2]").unwrap();
    let x1 = c.object_index("[1]").unwrap();
    let x0 = c.object_index("[0]").unwrap();
    assert_eq!(c.hom_dim(x2, x2), 4);
    assert_eq!(c.hom_dim(x1, x2), 2);
    assert_eq!(c.hom_dim(x2, x1), 1);
    assert_eq!(c.hom_dim(x0, x2), 1);
    assert_eq!(c.hom_dim(x2, x0), 0);
}

#[test]
fn fin_families_are_the_expected_classes() {
    // In fin_inj, the degree-lowering family degenerates to endomorphisms;
    // in fin_surj, the degree-raising family does.
    let inj = fin_inj(2, q()).unwrap();
    let x1 = inj.cat.object_index("[1]").unwrap();
    let x2 = inj.cat.object_index("[2]").unwrap();
    assert_eq!(inj.reedy.plus(x1, x2).dim(), 2);
    assert_eq!(inj.reedy.minus(x2, x1).dim(), 0);
    assert_eq!(inj.reedy.minus(x2, x2).dim(), 2);

    let surj = fin_surj(2, q()).unwrap();
    let y1 = surj.cat.object_index("[1]").unwrap();
    let y2 = surj.cat.object_index("[2]").unwrap();
    let y0 = surj.cat.object_index("[0]").unwrap();
    assert_eq!(surj.cat.hom_dim(y2, y1), 1);
    assert_eq!(surj.reedy.minus(y2, y1).dim(), 1);
    assert_eq!(surj.reedy.plus(y1, y2).dim(), 0);
    // The empty set is isolated: no surjections in or out except its identity.
    assert_eq!(surj.cat.hom_dim(y0, y1), 0);
    assert_eq!(surj.cat.hom_dim(y1, y0), 0);
    assert_eq!(surj.cat.hom_dim(y0, y0), 1);
}

#[test]
fn delta_plus_hom_sizes_are_binomials() {
    let inst = delta_plus(3, q()).unwrap();
    let c = &inst.cat;
    let idx = |m: usize| c.object_index(&format!("[{m}]")).unwrap();
    // Strictly increasing functions [m] -> [k] biject with m-subsets of [k].
    let binom = [[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 1, 3], [0, 0, 0, 1]];
    for m in 0..=3 {
        for k in 0..=3 {
            assert_eq!(c.hom_dim(idx(m), idx(k)), binom[m][k], "hom([{m}],[{k}])");
        }
    }
}

#[test]
fn cyclic_hom_sizes_and_rotation_groups() {
    let inst = cyclic(3, q()).unwrap();
    let c = &inst.cat;
    let idx = |m: usize| c.object_index(&format!("[{m}]")).unwrap();
    assert_eq!(c.hom_dim(idx(1), idx(1)), 1);
    assert_eq!(c.hom_dim(idx(2), idx(2)), 4);
    assert_eq!(c.hom_dim(idx(1), idx(2)), 2);
    assert_eq!(c.hom_dim(idx(2), idx(1)), 1);
    // All 27 maps [3] -> [3] except the three cyclic-order-reversing
    // permutations.
    assert_eq!(c.hom_dim(idx(3), idx(3)), 24);
    assert_eq!(c.hom_dim(idx(2), idx(3)), 9);
    assert_eq!(c.hom_dim(idx(3), idx(2)), 8);
    // Automorphisms are exactly the rotations.
    for m in 1..=3 {
        assert_eq!(inst.concrete.automorphisms(idx(m)).len(), m);
    }
}

#[test]
fn vect_fq_hom_sizes_and_units() {
    let inst = vect_fq(2, 2, q()).unwrap();
    let c = &inst.cat;
    let v = |m: usize| c.object_index(&format!("F2^{m}")).unwrap();
    assert_eq!(c.hom_dim(v(2), v(2)), 16);
    assert_eq!(c.hom_dim(v(1), v(2)), 4);
    assert_eq!(c.hom_dim(v(2), v(1)), 4);
    assert_eq!(c.hom_dim(v(0), v(2)), 1);
    // GL_2(F_2) has order 6; GL_1(F_2) is trivial.
    assert_eq!(inst.concrete.automorphisms(v(2)).len(), 6);
    assert_eq!(inst.concrete.automorphisms(v(1)).len(), 1);

    let inst3 = vect_fq(3, 1, q()).unwrap();
    let w1 = inst3.cat.object_index("F3^1").unwrap();
    assert_eq!(inst3.cat.hom_dim(w1, w1), 3);
    assert_eq!(inst3.concrete.automorphisms(w1).len(), 2);
}

#[test]
fn reedy_axioms_hold_across_the_zoo() {
    let instances: Vec<Instance> = vec![
        fin_all(2, q()).unwrap(),
        fin_inj(2, q()).unwrap(),
        fin_surj(2, q()).unwrap(),
        delta_plus(2, q()).unwrap(),
        cyclic(2, q()).unwrap(),
        poset_chain_meets(2, q()).unwrap(),
        quiver_ab(q()).unwrap(),
        quiver_ab_op(q()).unwrap(),
        dual_numbers(q()).unwrap(),
        fin_all(2, Field::prime(5).unwrap()).unwrap(),
        cyclic(2, Field::prime(3).unwrap()).unwrap(),
    ];
    for inst in &instances {
        assert!(inst.cat.check_axioms().passed(), "{}", inst.name);
        let report = check_reedy(&inst.cat, &inst.reedy);
        assert!(
            report.passed(),
            "{} failed: {:?}",
            inst.name,
            report.failed_axioms()
        );
    }
}

#[test]
fn param_bounds_are_enforced() {
    assert!(matches!(fin_all(4, q()), Err(ZooError::ParamOutOfRange(_))));
    assert!(matches!(cyclic(0, q()), Err(ZooError::ParamOutOfRange(_))));
    assert!(matches!(cyclic(4, q()), Err(ZooError::ParamOutOfRange(_))));
    assert!(matches!(vect_fq(5, 1, q()), Err(ZooError::ParamOutOfRange(_))));
    assert!(matches!(vect_fq(2, 3, q()), Err(ZooError::ParamOutOfRange(_))));
    assert!(matches!(poset_chain_meets(9, q()), Err(ZooError::ParamOutOfRange(_))));
}

fn reps_equal(cat: &lincat_core::LinCat, a: &lincat_core::Rep, b: &lincat_core::Rep) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    for m in cat.all_basis() {
        let ma = a.act_basis(m);
        let mb = b.act_basis(m);
        if ma.rows() != mb.rows() || ma.cols() != mb.cols() {
            return false;
        }
        for i in 0..ma.rows() {
            for j in 0..ma.cols() {
                if ma[(i, j)] != mb[(i, j)] {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn random_reps_are_deterministic_and_bounded() {
    let inst = fin_all(2, q()).unwrap();
    for seed in [0u64, 1, 7, 42] {
        let a = random_rep(&inst.cat, Side::Left, 3, seed);
        let b = random_rep(&inst.cat, Side::Left, 3, seed);
        a.validate(&inst.cat).unwrap();
        assert!(reps_equal(&inst.cat, &a, &b), "seed {seed} not reproducible");
        assert!(a.dims().iter().all(|&d| d <= 3));
    }
    // Different seeds should eventually differ.
    let pool = battery(&inst.cat, Side::Left, 3, 6, 100);
    assert_eq!(pool.len(), 6);
    let all_same = pool
        .windows(2)
        .all(|w| reps_equal(&inst.cat, &w[0], &w[1]));
    assert!(!all_same);
}

#[test]
fn random_reps_work_on_the_right_and_over_fp() {
    let inst = cyclic(2, Field::prime(3).unwrap()).unwrap();
    let r = random_rep(&inst.cat, Side::Right, 2, 9);
    r.validate(&inst.cat).unwrap();
    assert!(r.dims().iter().all(|&d| d <= 2));
}

#[test]
fn dual_numbers_multiplication_table() {
    let inst = dual_numbers(q()).unwrap();
    let c = &inst.cat;
    assert_eq!(c.hom_dim(0, 0), 2);
    let t = c.basis_elt(lincat_core::MorId { src: 0, tgt: 0, idx: 1 });
    let t2 = c.compose(&t, &t);
    assert!(t2.is_zero());
    let alg = inst.reedy.local_algebra(c, 0).unwrap();
    assert_eq!(alg.dim(), 2);
    // Nilpotents force a nonzero trace-form radical: not semisimple.
    assert!(alg.trace_form_radical().dim() > 0);
}
