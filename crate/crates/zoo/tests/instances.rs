//! Full-size instances: Reedy axioms, the degree-direction partial orders,
//! and the block decomposition of the factorization isomorphism.

use lincat_core::balanced_tensor;
use reedy::{check_reedy, partial_orders, rho_map};
use scalar_linalg::Field;
use zoo::*;

fn q() -> Field {
    Field::Rational
}

fn assert_reedy(inst: &Instance) {
    let report = check_reedy(&inst.cat, &inst.reedy);
    assert!(
        report.passed(),
        "{} failed: {:?}",
        inst.name,
        report.failed_axioms()
    );
    partial_orders(&inst.cat, &inst.reedy)
        .unwrap_or_else(|e| panic!("{}: {e}", inst.name));
}

#[test]
fn size_three_instances_satisfy_all_axioms() {
    for inst in [
        fin_all(3, q()).unwrap(),
        fin_inj(3, q()).unwrap(),
        fin_surj(3, q()).unwrap(),
        delta_plus(3, q()).unwrap(),
        cyclic(3, q()).unwrap(),
    ] {
        assert_reedy(&inst);
    }
}

#[test]
fn vector_space_instance_satisfies_all_axioms() {
    assert_reedy(&vect_fq(2, 2, q()).unwrap());
}

#[test]
fn axioms_are_field_independent_on_fin_all() {
    // The designated families are spanned by basis morphisms, so the axioms
    // and the bijectivity of the factorization map do not depend on the
    // coefficient field, including when the characteristic divides a local
    // group order.
    for p in [2, 3, 7] {
        assert_reedy(&fin_all(3, Field::prime(p).unwrap()).unwrap());
    }
}

#[test]
fn factorization_blocks_on_fin_all_2() {
    // At ([2], [2]) in fin_all(2) the block over z = [1] collects the four
    // non-injective maps factored through their image, and the block over
    // z = [2] is the two permutations times... the two surjections; the
    // empty set contributes nothing.  Dimensions 2 + 2 = 4.
    let inst = fin_all(2, q()).unwrap();
    let c = &inst.cat;
    let r = &inst.reedy;
    let x2 = c.object_index("[2]").unwrap();

    let rho = rho_map(c, r, x2, x2).unwrap();
    assert!(rho.is_bijective());
    assert_eq!(rho.domain_dim(), 4);
    assert_eq!(rho.codomain_dim(), 4);

    let mut block_dims = Vec::new();
    for z in 0..c.n_objects() {
        let alg = r.local_algebra(c, z).unwrap();
        let plus = r.plus_right_module(c, z, x2).unwrap();
        let minus = r.minus_left_module(c, x2, z).unwrap();
        let t = balanced_tensor(&alg, &plus, &minus).unwrap();
        block_dims.push(t.dim());
    }
    let mut sorted = block_dims.clone();
    sorted.sort();
    assert_eq!(sorted, vec![0, 2, 2]);
    assert_eq!(block_dims.iter().sum::<usize>(), c.hom_dim(x2, x2));
}

#[test]
fn partial_orders_distinguish_directions() {
    // fin_inj: ascending chains connect everything upward, descending ones
    // do not leave an object.
    let inst = fin_inj(2, q()).unwrap();
    let po = partial_orders(&inst.cat, &inst.reedy).unwrap();
    let x0 = inst.cat.object_index("[0]").unwrap();
    let x2 = inst.cat.object_index("[2]").unwrap();
    assert!(po.le_plus(x0, x2));
    assert!(!po.lt_minus(x0, x2));

    // fin_all: [0] receives no surjections, so it is minimal but isolated in
    // the descending order, while [1] sits strictly below [2].
    let inst = fin_all(2, q()).unwrap();
    let po = partial_orders(&inst.cat, &inst.reedy).unwrap();
    let y0 = inst.cat.object_index("[0]").unwrap();
    let y1 = inst.cat.object_index("[1]").unwrap();
    let y2 = inst.cat.object_index("[2]").unwrap();
    assert!(po.lt_minus(y1, y2));
    assert!(!po.le_minus(y0, y2));
    assert!(po.le_plus(y0, y1) && po.le_plus(y1, y2));
}
