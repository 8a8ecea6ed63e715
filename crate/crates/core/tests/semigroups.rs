use gradmod::semigroup::{enumerate, NumericalSemigroup, RelativeIdeal};
use proptest::prelude::*;

/// Membership up to `limit` by dynamic programming over the generators.
fn members(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut inside = vec![false; limit + 1];
    inside[0] = true;
    for n in 1..=limit {
        inside[n] = gens.iter().any(|&a| a as usize <= n && inside[n - a as usize]);
    }
    inside
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u64..=30, 1..=4)
        .prop_filter("gcd 1", |g| g.iter().fold(0, |acc, &a| gcd(acc, a)) == 1)
        .prop_map(|g| NumericalSemigroup::new(&g).unwrap())
}

proptest! {
    #[test]
    fn gaps_and_pseudo_frobenius_match_brute_force(h in semigroup()) {
        let limit = 2000;
        let inside = members(h.generators(), limit);
        let gaps: Vec<i64> = (0..=limit).filter(|&n| !inside[n]).map(|n| n as i64).collect();
        prop_assert_eq!(h.gaps(), gaps.clone());
        prop_assert_eq!(h.frobenius(), gaps.last().copied().unwrap_or(-1));
        let pf: Vec<i64> = gaps
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&a| inside[(g + a as i64) as usize]))
            .collect();
        prop_assert_eq!(h.pseudo_frobenius(), pf.clone());
        prop_assert_eq!(h.pseudo_frobenius_via_apery(), pf);
        let m = h.multiplicity() as i64;
        let ap = h.apery(m).unwrap();
        prop_assert_eq!(*ap.iter().max().unwrap() - m, h.frobenius());
    }

    #[test]
    fn symmetric_exactly_when_type_one(h in semigroup()) {
        let pf = h.pseudo_frobenius();
        let type_one = pf == vec![h.frobenius()];
        prop_assert_eq!(h.is_symmetric(), type_one || h.frobenius() < 0);
        if h.is_symmetric() {
            prop_assert!(h.canonical_ideal().is_translate_of(&h.whole()));
            prop_assert!(h.is_nearly_gorenstein());
        }
    }

    #[test]
    fn canonical_duality(h in semigroup(), gens in prop::collection::vec(-10i64..60, 1..4)) {
        let k = h.canonical_ideal();
        let i = RelativeIdeal::new(&h, &gens).unwrap();
        prop_assert!(k.colon(&k.colon(&i)) == i);
        prop_assert!(h.whole().colon(&h.whole()) == h.whole());
    }

    #[test]
    fn colon_route_fails_on_a_pseudo_frobenius_witness(h in semigroup()) {
        prop_assume!(h.frobenius() > 0);
        let m = h.maximal_ideal();
        let m2 = m.add(&m);
        let witness = h.pseudo_frobenius().iter().any(|&f| m.translate(f).is_subset_of(&m2));
        let s = h.surjection_criterion().unwrap();
        prop_assert_eq!(!s.via_colon, witness);
    }
}

#[test]
fn whole_family_agrees() {
    let family = enumerate(4, 40);
    let mut symmetric = 0;
    for h in &family {
        let s = h.surjection_criterion().unwrap();
        assert_eq!(s.via_pf, s.via_colon, "{:?}", h.generators());
        if h.is_symmetric() {
            symmetric += 1;
            assert!(h.is_nearly_gorenstein(), "{:?}", h.generators());
        }
    }
    assert!(symmetric > 0);
}
