mod common;

use dorey_core::qchar::{product_contains_one, CharacterTable, Rapidity};
use dorey_core::Family;
use proptest::prelude::*;

use common::{brute_contains_one, product_oracle_disagreements, rs};

#[test]
fn fast_product_test_matches_the_full_scan() {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::D, 4)] {
        let r = rs(f, n);
        let t = CharacterTable::new(&r).unwrap();
        let (cases, bad) = product_oracle_disagreements(&r, &t);
        assert_eq!(cases, n.pow(3) * (2 * r.coxeter_number() + 1).pow(2));
        assert!(bad.is_empty(), "{}: {bad:?}", r.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Larger algebras, sampled.
    #[test]
    fn sampled_products(a in 0..common::DESK.len(), nodes in prop::array::uniform3(0usize..8), e2 in -12i32..=12, e3 in -12i32..=12) {
        let (r, t) = &common::desk()[a];
        let h = r.coxeter_number() as i32;
        let n = r.rank();
        let f = [(nodes[0] % n, 0), (nodes[1] % n, e2.clamp(-h, h)), (nodes[2] % n, e3.clamp(-h, h))];
        let fast = product_contains_one(t, f.map(|(i, e)| (i, Rapidity::q(e))));
        prop_assert_eq!(fast, brute_contains_one(t, f));
    }
}
