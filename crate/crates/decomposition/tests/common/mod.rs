//! Shared hand-built instance: sets of size 0 and 1 with partially defined
//! injections.  Hom(s1, s1) = {id, e} where e = (undefined everywhere) is
//! the composite s1 -> s0 -> s1; e is idempotent and central, so this is
//! the smallest instance where a nonzero central idempotent exists.

use lincat_core::{ConcreteCatBuilder, LinCat, MorId};
use reedy::ReedyStructure;
use scalar_linalg::Field;

pub fn partial_injections(field: Field) -> (LinCat, ReedyStructure) {
    let mut b = ConcreteCatBuilder::new();
    let s0 = b.add_object("s0", None);
    let s1 = b.add_object("s1", None);
    let id0 = b.add_morphism(s0, s0, "id0", None).unwrap();
    let e01 = b.add_morphism(s0, s1, "e01", None).unwrap();
    let e10 = b.add_morphism(s1, s0, "e10", None).unwrap();
    let id1 = b.add_morphism(s1, s1, "id1", None).unwrap();
    let e11 = b.add_morphism(s1, s1, "e11", None).unwrap();
    b.set_identity(s0, id0);
    b.set_identity(s1, id1);
    // No underlying functions, so the whole composition table is explicit.
    b.set_composite(id0, id0, id0);
    b.set_composite(e01, id0, e01);
    b.set_composite(e10, e01, id0);
    b.set_composite(id1, e01, e01);
    b.set_composite(e11, e01, e01);
    b.set_composite(id0, e10, e10);
    b.set_composite(e01, e10, e11);
    b.set_composite(id1, id1, id1);
    b.set_composite(e11, id1, e11);
    b.set_composite(e10, id1, e10);
    b.set_composite(id1, e11, e11);
    b.set_composite(e11, e11, e11);
    b.set_composite(e10, e11, e10);
    let concrete = b.build().unwrap();
    let cat = LinCat::linearize(&concrete, field);
    assert!(cat.check_axioms().passed());
    let in_plus = |m: MorId| (m.src == m.tgt && m.idx == 0) || (m.src == 0 && m.tgt == 1);
    let in_minus = |m: MorId| (m.src == m.tgt && m.idx == 0) || (m.src == 1 && m.tgt == 0);
    let r = ReedyStructure::from_basis_morphisms(&cat, vec![0, 1], in_plus, in_minus).unwrap();
    (cat, r)
}
