use gradmod::exactla::Field;
use gradmod::ring::{monomials_of_degree, normalize_ideal, Monomial, Ring, RingElem};
use proptest::prelude::*;

fn binom(n: i64, k: i64) -> usize {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as usize
}

/// Monomials of degree `d` outside the ideal, by inclusion-exclusion over
/// lcms of the generators.
fn hilbert_oracle(nvars: usize, gens: &[Monomial], d: i64) -> usize {
    let n = nvars as i64;
    let mut total = binom(d + n - 1, n - 1) as i128;
    for mask in 1u32..(1 << gens.len()) {
        let mut lcm = Monomial::one(nvars);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(g);
            }
        }
        let rest = d - lcm.degree() as i64;
        let count = if rest < 0 { 0 } else { binom(rest + n - 1, n - 1) as i128 };
        if mask.count_ones() % 2 == 1 {
            total -= count;
        } else {
            total += count;
        }
    }
    total as usize
}

fn monomial(nvars: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_deg, nvars).prop_map(Monomial::new)
}

fn ideal(nvars: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(monomial(nvars, 4), 1..=5)
        .prop_map(|g| g.into_iter().filter(|m| m.degree() > 0).collect::<Vec<_>>())
        .prop_filter("nonempty ideal", |g| !g.is_empty())
}

const NAMES: [&str; 3] = ["x", "y", "z"];

fn ring(nvars: usize, gens: &[Monomial]) -> Ring {
    Ring::new(&NAMES[..nvars], Field::DEFAULT, gens).unwrap()
}

fn form(r: &Ring, d: usize, coeffs: &[i64]) -> RingElem {
    let basis = monomials_of_degree(r.nvars(), d);
    let f = r.field();
    let terms = basis.into_iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m, f.from_i64(c)));
    RingElem::from_terms(r, terms).unwrap()
}

proptest! {
    #[test]
    fn hilbert_function_matches_inclusion_exclusion(nvars in 2usize..=3, gens in ideal(3), d in 0i64..=8) {
        let gens: Vec<Monomial> = gens.into_iter().map(|m| Monomial::new(m.exponents()[..nvars].to_vec())).filter(|m| m.degree() > 0).collect();
        prop_assume!(!gens.is_empty());
        let r = ring(nvars, &gens);
        prop_assert_eq!(r.hilbert_value(d), hilbert_oracle(nvars, &normalize_ideal(&gens), d));
        prop_assert_eq!(r.hilbert_value(d), hilbert_oracle(nvars, &gens, d));
    }

    #[test]
    fn artinian_rings_stay_zero(nvars in 2usize..=3, s in 2usize..=5, extra in prop::collection::vec(monomial(3, 3), 0..3)) {
        let mut gens = monomials_of_degree(nvars, s);
        gens.extend(extra.into_iter().map(|m| Monomial::new(m.exponents()[..nvars].to_vec())).filter(|m| m.degree() > 0));
        let r = ring(nvars, &gens);
        let bound = r.socle_bound().unwrap();
        prop_assert!(bound <= s);
        for d in bound..=bound + 5 {
            prop_assert_eq!(r.hilbert_value(d as i64), 0);
        }
    }

    #[test]
    fn products_do_not_depend_on_order(
        gens in ideal(3),
        da in 0usize..=2, db in 0usize..=2, dc in 0usize..=2,
        ca in prop::collection::vec(-3i64..=3, 1..6),
        cb in prop::collection::vec(-3i64..=3, 1..6),
        cc in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let r = ring(3, &gens);
        let (a, b, c) = (form(&r, da, &ca), form(&r, db, &cb), form(&r, dc, &cc));
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        // Term by term: multiplying monomial by monomial and summing gives the same element.
        let mut acc = RingElem::zero(&r);
        for (m, coef) in b.terms() {
            acc = acc.add(&a.mul_monomial(m).scale(coef)).unwrap();
        }
        prop_assert_eq!(acc, a.mul(&b).unwrap());
        let b2 = form(&r, db, &cc);
        let left = a.mul(&b.add(&b2).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&b2).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn hilbert_by_hand() {
    // k[x,y]/(x^2, xy, y^3): 1, x, y, y^2.
    let p = |e: &[u32]| Monomial::new(e.to_vec());
    let r = ring(2, &[p(&[2, 0]), p(&[1, 1]), p(&[0, 3])]);
    let h: Vec<usize> = (0..5).map(|d| r.hilbert_value(d)).collect();
    assert_eq!(h, vec![1, 2, 1, 0, 0]);
    assert_eq!(r.socle_bound(), Some(3));
}
