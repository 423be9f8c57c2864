//! Layer dimensions of the standard filtration of representables, and
//! objectwise counts of irreducible modules over the local algebras.

use homalg::{
    check_filtration_hypotheses, count_irreducibles, filtration_of_representable, HomalgError,
};
use scalar_linalg::Field;
use zoo::{cyclic, fin_all, fin_inj, vect_fq};

fn q() -> Field {
    Field::Rational
}

#[test]
fn representable_filtration_layers_on_sets_of_size_two() {
    let inst = fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    check_filtration_hypotheses(cat, &inst.reedy).unwrap();

    // hom([2], -) has dimensions (0, 1, 4); the three layers contribute
    // nothing in degree 0, the non-invertible part in degree 1, and the
    // regular module over the symmetric group in degree 2.
    let filt = filtration_of_representable(cat, &inst.reedy, 2).unwrap();
    assert_eq!(filt.levels.len(), 3);
    let layer_dims: Vec<Vec<usize>> = filt
        .levels
        .iter()
        .map(|l| l.factor.dims().to_vec())
        .collect();
    assert_eq!(
        layer_dims,
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 0, 2]]
    );
    for level in &filt.levels {
        assert_eq!(level.factor.dims(), &level.expected_dims[..]);
    }

    // hom([1], -) is exhausted at level 1, hom([0], -) at level 0.
    let filt = filtration_of_representable(cat, &inst.reedy, 1).unwrap();
    let layer_dims: Vec<Vec<usize>> = filt
        .levels
        .iter()
        .map(|l| l.factor.dims().to_vec())
        .collect();
    assert_eq!(layer_dims, vec![vec![0, 0, 0], vec![0, 1, 2]]);
    let filt = filtration_of_representable(cat, &inst.reedy, 0).unwrap();
    let layer_dims: Vec<Vec<usize>> = filt
        .levels
        .iter()
        .map(|l| l.factor.dims().to_vec())
        .collect();
    assert_eq!(layer_dims, vec![vec![1, 1, 1]]);
}

#[test]
fn filtrations_exist_across_instances() {
    // The construction cross-checks every layer against the block
    // dimensions of the factorization isomorphism, so a successful return
    // is already a verification.
    let instances = [
        fin_all(2, q()).unwrap(),
        fin_inj(2, q()).unwrap(),
        cyclic(2, q()).unwrap(),
        vect_fq(2, 2, q()).unwrap(),
    ];
    for inst in &instances {
        check_filtration_hypotheses(&inst.cat, &inst.reedy).unwrap();
        for x in 0..inst.cat.n_objects() {
            let filt = filtration_of_representable(&inst.cat, &inst.reedy, x).unwrap();
            assert_eq!(filt.x, x);
            let totals: Vec<usize> = (0..inst.cat.n_objects())
                .map(|y| filt.levels.iter().map(|l| l.factor.dim_at(y)).sum())
                .collect();
            let expected: Vec<usize> = (0..inst.cat.n_objects())
                .map(|y| inst.cat.hom_dim(x, y))
                .collect();
            assert_eq!(totals, expected, "{}: object {x}", inst.name);
        }
    }
}

#[test]
fn rational_counts_follow_cyclic_subgroup_classes() {
    let cases: Vec<(zoo::Instance, Vec<usize>)> = vec![
        (fin_all(2, q()).unwrap(), vec![1, 1, 2]),
        (fin_all(3, q()).unwrap(), vec![1, 1, 2, 3]),
        (cyclic(3, q()).unwrap(), vec![1, 2, 2]),
        (vect_fq(2, 2, q()).unwrap(), vec![1, 1, 3]),
    ];
    for (inst, expected) in &cases {
        let count = count_irreducibles(&inst.cat, &inst.reedy).unwrap();
        assert_eq!(&count.per_object, expected, "{}", inst.name);
        assert_eq!(count.total, expected.iter().sum::<usize>());
        assert_eq!(count.certificates.len(), inst.cat.n_objects());
        assert!(count.certificates.iter().all(|c| !c.is_empty()));
    }
    assert_eq!(
        count_irreducibles(&cases[1].0.cat, &cases[1].0.reedy)
            .unwrap()
            .total,
        7
    );
}

#[test]
fn prime_field_counts_follow_power_map_orbits() {
    // Over F_p with p prime to the group orders, the count is the number of
    // orbits of conjugacy classes under the p-th power map.
    let cases = [
        (cyclic(3, Field::prime(5).unwrap()), vec![1, 2, 2]),
        (cyclic(3, Field::prime(7).unwrap()), vec![1, 2, 3]),
        (fin_all(2, Field::prime(3).unwrap()), vec![1, 1, 2]),
        (fin_all(3, Field::prime(5).unwrap()), vec![1, 1, 2, 3]),
    ];
    for (inst, expected) in &cases {
        let inst = inst.as_ref().unwrap();
        let count = count_irreducibles(&inst.cat, &inst.reedy).unwrap();
        assert_eq!(&count.per_object, expected, "{}", inst.name);
    }
}

#[test]
fn modular_cases_are_refused() {
    let refused = [
        fin_all(2, Field::prime(2).unwrap()).unwrap(),
        cyclic(2, Field::prime(2).unwrap()).unwrap(),
        cyclic(3, Field::prime(3).unwrap()).unwrap(),
        vect_fq(2, 2, Field::prime(2).unwrap()).unwrap(),
    ];
    for inst in &refused {
        let err = count_irreducibles(&inst.cat, &inst.reedy).unwrap_err();
        match err {
            HomalgError::NotSemisimpleUnsupported(_) => {}
            other => panic!("{}: expected a semisimplicity refusal, got {other}", inst.name),
        }
        assert!(err.to_string().starts_with("NOT_SEMISIMPLE_UNSUPPORTED"));
    }
}
