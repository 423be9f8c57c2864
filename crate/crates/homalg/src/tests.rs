use crate::*;
use lincat_core::{LinCat, MorId, Rep, Side};
use scalar_linalg::{Field, Mat};
use std::collections::HashMap;

fn q() -> Field {
    Field::Rational
}

/// The simple left module concentrated at `x` with the identity action.
fn simple_at(cat: &LinCat, x: usize) -> Rep {
    let field = cat.field();
    let dims: Vec<usize> = (0..cat.n_objects()).map(|o| usize::from(o == x)).collect();
    let mut action = HashMap::new();
    for m in cat.all_basis() {
        let (r, c) = (dims[m.tgt], dims[m.src]);
        let mat = if m.src == x && m.tgt == x {
            // The identity coefficient of this basis vector.
            let id = cat.identity(x);
            Mat::from_fn(field, 1, 1, |_, _| id.coeffs[m.idx].clone())
        } else {
            Mat::zero(field, r, c)
        };
        action.insert(m, mat);
    }
    Rep::new(cat, Side::Left, dims, action).unwrap()
}

#[test]
fn quiver_simple_modules_have_the_expected_ext() {
    let inst = zoo::quiver_ab(q()).unwrap();
    let cat = &inst.cat;
    let a = cat.object_index("a").unwrap();
    let b = cat.object_index("b").unwrap();
    let sa = simple_at(cat, a);
    let sb = simple_at(cat, b);

    // The presentation of the simple at the source has the other simple as
    // its syzygy.
    let pres = ProjPresentation::new(cat, &sa).unwrap();
    assert_eq!(pres.p0.dims(), &[1, 1]);
    assert_eq!(pres.syzygy.dims(), &[0, 1]);

    assert_eq!(ext1(cat, &sa, &sb).unwrap().dim, 1);
    assert_eq!(ext1(cat, &sb, &sa).unwrap().dim, 0);
    assert_eq!(ext1(cat, &sa, &sa).unwrap().dim, 0);
    assert_eq!(ext1(cat, &sb, &sb).unwrap().dim, 0);

    // The arrow-target simple is projective (it is the representable);
    // the source simple is not.
    assert!(is_projective_rep(cat, &sb).unwrap());
    assert!(!is_projective_rep(cat, &sa).unwrap());
    // Dually for injectivity.
    assert!(is_injective_rep(cat, &sa).unwrap());
    assert!(!is_injective_rep(cat, &sb).unwrap());
}

#[test]
fn representables_are_projective() {
    let inst = zoo::fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    for x in 0..cat.n_objects() {
        let p = Rep::representable(cat, x, Side::Left);
        assert!(is_projective_rep(cat, &p).unwrap());
        let p = Rep::representable(cat, x, Side::Right);
        assert!(is_projective_rep(cat, &p).unwrap());
    }
}

#[test]
fn dual_numbers_have_self_torsion() {
    let inst = zoo::dual_numbers(q()).unwrap();
    let cat = &inst.cat;
    let field = cat.field();
    // k = k[t]/(t^2) modulo (t): one-dimensional, t acts as zero.
    let mk = |side: Side| {
        let mut action = HashMap::new();
        action.insert(MorId { src: 0, tgt: 0, idx: 0 }, Mat::identity(field, 1));
        action.insert(MorId { src: 0, tgt: 0, idx: 1 }, Mat::zero(field, 1, 1));
        Rep::new(cat, side, vec![1], action).unwrap()
    };
    let k_left = mk(Side::Left);
    let k_right = mk(Side::Right);
    assert_eq!(tor1(cat, &k_right, &k_left).unwrap(), 1);
    assert_eq!(ext1(cat, &k_left, &k_left).unwrap().dim, 1);
    assert!(!is_projective_rep(cat, &k_left).unwrap());

    // The regular module has no torsion against anything.
    let reg = Rep::representable(cat, 0, Side::Right);
    assert_eq!(tor1(cat, &reg, &k_left).unwrap(), 0);
}

#[test]
fn tensor_with_representable_recovers_values() {
    // hom(-, x) (x)_C N = N(x) for every left module N.
    let inst = zoo::fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    for x in 0..cat.n_objects() {
        let px = Rep::representable(cat, x, Side::Right);
        for y in 0..cat.n_objects() {
            let n = Rep::representable(cat, y, Side::Left);
            let t = rep_tensor(cat, &px, &n).unwrap();
            assert_eq!(t.dim(), n.dim_at(x), "x = {x}, n = representable {y}");
        }
    }
}

#[test]
fn dual_rep_is_an_exact_involution() {
    let inst = zoo::fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let p = Rep::representable(cat, 2, Side::Left);
    let d = dual_rep(cat, &p);
    assert_eq!(d.side(), Side::Right);
    d.validate(cat).unwrap();
    let dd = dual_rep(cat, &d);
    assert_eq!(dd.dims(), p.dims());
    for m in cat.all_basis() {
        assert_eq!(dd.act_basis(m), p.act_basis(m));
    }
    // Representables are projective, so their duals are injective.
    assert!(is_injective_rep(cat, &d).unwrap());
}

#[test]
fn syzygy_of_the_top_standard_module() {
    let inst = zoo::fin_all(2, q()).unwrap();
    let cat = &inst.cat;
    let (delta, _) = reedy::standard_module(cat, &inst.reedy, 2, Side::Left).unwrap();
    assert_eq!(delta.dims(), &[0, 0, 2]);
    let pres = ProjPresentation::new(cat, &delta).unwrap();
    assert_eq!(pres.p0.dims(), &[0, 2, 8]);
    assert_eq!(pres.syzygy.dims(), &[0, 2, 6]);
    assert!(pres.eval.is_epi());
    assert!(pres.incl.is_mono());
}
