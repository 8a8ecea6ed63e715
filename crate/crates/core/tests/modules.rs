use gradmod::exactla::Field;
use gradmod::gmod::{is_burch, is_weakly_m_full, socle_dims, window_module, Module, PresentedModule, SubmoduleWindow, Verdict};
use gradmod::instance::{parse_instance, parse_poly};
use gradmod::resolve::{entry_ideal, suggest_window, tor_dims, tor_from, Resolution};
use gradmod::ring::{Monomial, Ring, RingElem};
use proptest::prelude::*;

/// `k[x,y]/(x^a, y^b, extra)`: Artinian, singular, at most degree 7.
fn ring_strategy() -> impl Strategy<Value = Ring> {
    (2u32..=4, 2u32..=4, prop::option::of((1u32..=3, 1u32..=3))).prop_map(|(a, b, extra)| {
        let mut gens = vec![Monomial::new(vec![a, 0]), Monomial::new(vec![0, b])];
        if let Some((i, j)) = extra {
            gens.push(Monomial::new(vec![i, j]));
        }
        Ring::new(&["x", "y"], Field::DEFAULT, &gens).unwrap()
    })
}

/// Up to three forms of degree 1 or 2, as coefficient lists over the degree basis.
fn forms_strategy() -> impl Strategy<Value = Vec<(usize, Vec<i64>)>> {
    prop::collection::vec((1usize..=2, prop::collection::vec(-2i64..=2, 3)), 1..=3)
}

fn forms(r: &Ring, spec: &[(usize, Vec<i64>)]) -> Vec<RingElem> {
    spec.iter()
        .map(|(d, c)| {
            let basis = r.degree_basis(*d);
            let f = r.field();
            RingElem::from_terms(r, basis.into_iter().zip(c.iter().cycle()).map(|(m, &k)| (m, f.from_i64(k)))).unwrap()
        })
        .filter(|e| !e.is_zero())
        .collect()
}

fn ideal(r: &Ring, gens: &[RingElem], hi: i64) -> SubmoduleWindow {
    let x = PresentedModule::ring_module(r);
    let g: Vec<Vec<RingElem>> = gens.iter().map(|e| vec![e.clone()]).collect();
    SubmoduleWindow::span_closure(&x, &g, hi).unwrap()
}

fn cyclic(r: &Ring, gens: &[RingElem]) -> Module {
    PresentedModule::cyclic(r, gens).unwrap()
}

const HI: i64 = 10;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn submodule_predicates(r in ring_strategy(), spec in forms_strategy()) {
        let gens = forms(&r, &spec);
        prop_assume!(!gens.is_empty());
        let n = ideal(&r, &gens, HI);
        // Both forms of the Burch test are computed inside and must agree.
        let burch = is_burch(&n, HI).unwrap();
        prop_assert!(burch.verdict.is_exact());
        let socle = socle_dims(&n).iter().any(|&(_, c)| c > 0);
        if burch.verdict == Verdict::Holds {
            prop_assert!(socle);
        }
        let mn = n.m_multiple();
        if !mn.is_zero() {
            prop_assert_eq!(is_burch(&mn, HI).unwrap().verdict, Verdict::Holds);
        }
        let colon = n.colon_m();
        prop_assert_eq!(is_weakly_m_full(&colon, colon.hi()).unwrap().verdict, Verdict::Holds);
        if is_weakly_m_full(&n, HI).unwrap().verdict == Verdict::Holds && socle {
            prop_assert_eq!(burch.verdict, Verdict::Holds);
        }
    }

    #[test]
    fn colon_by_a_product(r in ring_strategy(), spec in forms_strategy(), i in 0usize..2, j in 0usize..2) {
        let gens = forms(&r, &spec);
        prop_assume!(!gens.is_empty());
        let n = ideal(&r, &gens, HI);
        let (a, b) = (RingElem::var(&r, i), RingElem::var(&r, j));
        let ab = a.mul(&b).unwrap();
        let once = n.colon(&[ab]).unwrap();
        let twice = n.colon(&[a]).unwrap().colon(&[b]).unwrap();
        prop_assert!(once.equal_upto(&twice, HI - 2));
    }

    #[test]
    fn resolutions_are_minimal_exact_complexes(r in ring_strategy(), spec in forms_strategy()) {
        let gens = forms(&r, &spec);
        let m = cyclic(&r, &gens);
        let res = Resolution::compute(&m, 3, 9).unwrap();
        prop_assert!(res.check_complex());
        prop_assert!(res.check_minimal());
        for i in 0..3 {
            for d in 0..=9 {
                prop_assert_eq!(res.homology_dim(i, d), 0, "F_{} degree {}", i, d);
            }
        }
    }

    #[test]
    fn tor_is_symmetric(r in ring_strategy(), a in forms_strategy(), b in forms_strategy()) {
        let (m, n) = (cyclic(&r, &forms(&r, &a)), cyclic(&r, &forms(&r, &b)));
        let d = suggest_window(&m, &n, 2).unwrap().max(suggest_window(&n, &m, 2).unwrap());
        let (mn, nm) = (tor_dims(&m, &n, 2, d).unwrap(), tor_dims(&n, &m, 2, d).unwrap());
        for i in 0..=2 {
            let known = |row: &gradmod::resolve::HomologyRow| -> Vec<(i64, usize)> {
                row.entries.iter().filter_map(|&(e, v)| v.filter(|&v| v > 0).map(|v| (e, v))).collect()
            };
            prop_assert_eq!(known(mn.row(i)), known(nm.row(i)));
            prop_assert_eq!(mn.vanishes(i), nm.vanishes(i));
        }
    }

    #[test]
    fn vanishing_tor_against_mn_puts_entries_in_the_annihilator(r in ring_strategy(), a in forms_strategy(), b in forms_strategy()) {
        let m = cyclic(&r, &forms(&r, &a));
        let gens = forms(&r, &b);
        prop_assume!(!gens.is_empty());
        let n = ideal(&r, &gens, HI);
        let mn = n.m_multiple();
        let mn_mod = window_module(&mn).unwrap();
        let s = r.socle_bound().unwrap() as i64;
        let d = suggest_window(&m, &mn_mod, 2).unwrap();
        let res = Resolution::compute(&m, 3, d).unwrap();
        let tor = tor_from(&res, &mn_mod, 2).unwrap();
        for t in 0..=2 {
            if tor.vanishes(t) == Some(true) {
                prop_assert!(entry_ideal(res.differential(t + 1), s).is_subset_of(&n.annihilator(s)));
            }
        }
        for t in 0..2 {
            if tor.vanishes(t) == Some(true) && tor.vanishes(t + 1) == Some(true) {
                prop_assert!(res.betti(t + 1) == 0 || mn.is_zero());
            }
        }
    }

    #[test]
    fn instance_files_round_trip(seed in any::<u64>()) {
        let spec = gradmod::harness::generate_instance(seed % 5000);
        let f = parse_instance(&spec.text).unwrap();
        let again = parse_instance(&f.to_string()).unwrap();
        prop_assert_eq!(&f, &again);
        prop_assert_eq!(f.to_string(), again.to_string());
    }

    #[test]
    fn polynomials_print_and_parse_back(r in ring_strategy(), spec in forms_strategy()) {
        for e in forms(&r, &spec) {
            prop_assert_eq!(parse_poly(&r, &e.to_string()).unwrap(), e);
        }
    }
}
