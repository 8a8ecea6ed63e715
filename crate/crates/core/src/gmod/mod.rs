//! Finitely presented graded modules, submodule windows and the submodule
//! predicates built on them.

pub mod certify;
pub mod free;
pub mod hom;
pub mod kernel;
pub mod module;
pub mod window;

use thiserror::Error;

use crate::ring::RingError;

pub use certify::{annihilator_window, is_burch, is_faithful, is_m_full_with, is_weakly_m_full, Certificate, Verdict, Witness};
pub use free::{FreeModule, ModuleMap};
pub use hom::{burch_embeddable, hom_space, maximal_ideal_module, presentation_of, trace_window, window_module, HomSpace};
pub use module::{Module, PresentedModule};
pub use window::{FiniteLength, SubmoduleWindow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("expected {expected} entries, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("submodules of different ambient modules")]
    AmbientMismatch,
    #[error("generator of degree 0")]
    DegreeZeroGenerator,
    #[error("window {have} is below the requested bound {need}")]
    WindowTooSmall { have: i64, need: i64 },
    #[error("insufficient window: {window}{}", .needed.map_or(String::new(), |n| format!(", certification needs {n}")))]
    InsufficientWindow { window: i64, needed: Option<i64> },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `(N :_X m) / N`, the socle of `X/N`, degree by degree.
pub fn socle_dims(n: &SubmoduleWindow) -> Vec<(i64, usize)> {
    let colon = n.colon_m();
    (colon.lo()..=colon.hi()).map(|d| (d, n.codim(d) - colon.codim(d))).collect()
}

/// Coset representatives of a basis of `Soc(X/N)_d`.
pub fn socle_basis(n: &SubmoduleWindow, d: i64) -> Vec<Vec<crate::exactla::Scalar>> {
    let colon = n.colon_m();
    if d > colon.hi() {
        return Vec::new();
    }
    let base = n.component(d);
    let mut acc = base.clone();
    let mut out = Vec::new();
    for v in colon.component(d).basis() {
        if !acc.contains(v) {
            out.push(base.reduce(v));
            acc = acc.sum(&crate::exactla::Subspace::span(acc.field(), acc.ambient_dim(), vec![v.clone()]));
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactla::Field;
    use crate::instance::parse_poly;
    use crate::ring::{Monomial, Ring, RingElem};

    pub(crate) fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    pub(crate) fn poly(r: &Ring, s: &str) -> RingElem {
        parse_poly(r, s).unwrap()
    }

    pub(crate) fn ring(vars: &[&str], ideal: &[&str]) -> Ring {
        let p = Ring::polynomial(vars, Field::DEFAULT).unwrap();
        let gens: Vec<Monomial> = ideal.iter().map(|s| poly(&p, s).terms().keys().next().unwrap().clone()).collect();
        Ring::new(vars, Field::DEFAULT, &gens).unwrap()
    }

    pub(crate) fn burch_ring() -> Ring {
        ring(&["x", "y", "z", "w"], &["x^3", "x^2*y", "x*y^2", "y^3", "x*w"])
    }

    pub(crate) fn ideal_window(r: &Ring, gens: &[&str], hi: i64) -> SubmoduleWindow {
        let x = PresentedModule::ring_module(r);
        let g: Vec<Vec<RingElem>> = gens.iter().map(|s| vec![poly(r, s)]).collect();
        SubmoduleWindow::span_closure(&x, &g, hi).unwrap()
    }

    fn dims(n: &SubmoduleWindow, upto: i64) -> Vec<usize> {
        (0..=upto).map(|d| n.dim(d)).collect()
    }

    #[test]
    fn span_closure_examples() {
        let r = burch_ring();
        let n = ideal_window(&r, &["x*y", "y^2", "z", "w"], 3);
        assert_eq!(dims(&n, 2)[..2], [0, 2]);
        // N_2: xy, y², and z, w times x, y, z, w less xw = 0: 2 + 8 - 1 - (zw counted once) ...
        // independent count: R_2 has 10 monomials minus x^2 kept outside N and...
        let r2 = r.hilbert_value(2);
        assert_eq!(n.dim(2), r2 - 1, "only x^2 survives in degree 2");
        let x3 = ring(&["x"], &["x^3"]);
        let n = ideal_window(&x3, &["x"], 4);
        assert_eq!(dims(&n, 4), vec![0, 1, 1, 0, 0]);
        assert!(ideal_window(&x3, &[], 3).is_zero());
    }

    #[test]
    fn mn_and_colons() {
        let x3 = ring(&["x"], &["x^3"]);
        let n = ideal_window(&x3, &["x"], 4);
        assert_eq!(dims(&n.m_multiple(), 4), vec![0, 0, 1, 0, 0]);
        let x2 = ideal_window(&x3, &["x^2"], 4);
        assert_eq!(dims(&x2.colon_m(), 3), vec![0, 1, 1, 0]);
        let r = burch_ring();
        let n = ideal_window(&r, &["x*y", "y^2", "z", "w"], 4);
        let y = r.var_index("y").unwrap();
        let yv = PresentedModule::ring_module(&r).cover().coords_at(&[RingElem::var(&r, y)], 1).unwrap();
        assert!(n.colon_m().contains(1, &yv));
        // The socle of the whole ring is killed by m.
        let full = SubmoduleWindow::full(&PresentedModule::ring_module(&x3), 4);
        let soc = SubmoduleWindow::zero(full.ambient(), 4).colon_m();
        assert!(soc.m_multiple().is_zero());
        assert_eq!(dims(&full.m_multiple(), 3), vec![0, 1, 1, 0]);
    }

    #[test]
    fn colon_by_element_examples() {
        let uv = ring(&["u", "v"], &["u*v"]);
        let n = ideal_window(&uv, &["u^2", "v^2"], 6);
        let w = n.m_multiple().colon_by_element(&poly(&uv, "u + v")).unwrap();
        // u(u+v) = u^2 is outside mN = m^3, so the colon is N itself.
        assert!(w.equal_upto(&n, 5));
        let u = PresentedModule::ring_module(&uv).cover().coords_at(&[poly(&uv, "u")], 1).unwrap();
        assert!(!w.contains(1, &u));
        let x3 = ring(&["x"], &["x^3"]);
        let z = ideal_window(&x3, &["x^2"], 4);
        let all = z.colon_by_element(&poly(&x3, "x^2")).unwrap();
        assert_eq!(dims(&all, 2), vec![1, 1, 1]);
    }

    #[test]
    fn socle_examples() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let zero = SubmoduleWindow::zero(&PresentedModule::ring_module(&r), 4);
        assert_eq!(socle_dims(&zero), vec![(0, 0), (1, 0), (2, 1), (3, 0)]);
        assert_eq!(socle_basis(&zero, 2).len(), 1);
        let uv = ring(&["u", "v"], &["u*v"]);
        let zero = SubmoduleWindow::zero(&PresentedModule::ring_module(&uv), 6);
        assert!(socle_dims(&zero).iter().all(|&(_, s)| s == 0));
        let k = PresentedModule::residue_field(&r);
        assert_eq!(socle_dims(&SubmoduleWindow::zero(&k, 3))[0], (0, 1));
    }

    #[test]
    fn burch_examples() {
        let r = burch_ring();
        let n = ideal_window(&r, &["x*y", "y^2", "z", "w"], 4);
        let c = is_burch(&n, 4).unwrap();
        assert_eq!(c.verdict, Verdict::Holds);
        assert_eq!(c.witness.as_ref().unwrap().element, "x*y");
        let zero = ideal_window(&r, &[], 4);
        assert!(!is_burch(&zero, 4).unwrap().verdict.positive());
        let x3 = ring(&["x"], &["x^3"]);
        let m = ideal_window(&x3, &["x"], 4);
        assert_eq!(is_burch(&m, 4).unwrap().verdict, Verdict::Holds);
        // X/0 = k[x]/(x^3) has top degree 2; at D = 4 "not Burch" is certified.
        let zero = ideal_window(&x3, &[], 4);
        assert_eq!(is_burch(&zero, 4).unwrap().verdict, Verdict::Fails);
        assert_eq!(is_burch(&zero, 3).unwrap().verdict, Verdict::FailsInWindow);
        assert!(matches!(is_burch(&zero, 3).unwrap().require_exact(), Err(ModError::InsufficientWindow { .. })));
        assert!(matches!(is_burch(&zero, 9), Err(ModError::WindowTooSmall { .. })));
    }

    #[test]
    fn weakly_m_full_examples() {
        let x3 = ring(&["x"], &["x^3"]);
        let n = ideal_window(&x3, &["x"], 4);
        assert_eq!(is_weakly_m_full(&n, 4).unwrap().verdict, Verdict::Holds);
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let n = ideal_window(&r, &["x"], 4);
        let c = is_weakly_m_full(&n, 4).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        assert_eq!(c.witness.unwrap().element, "y");
    }

    #[test]
    fn weakly_m_full_graded_instance() {
        // N = (m/vR) ⊕ R inside (R/vR) ⊕ R over k[u,v]/(uv).
        let uv = ring(&["u", "v"], &["u*v"]);
        let x = PresentedModule::coker_of(&uv, vec![0, 0], vec![vec![poly(&uv, "v"), RingElem::zero(&uv)]]).unwrap();
        let z = RingElem::zero(&uv);
        let gens = vec![vec![poly(&uv, "u"), z.clone()], vec![z.clone(), RingElem::one(&uv)]];
        let n = SubmoduleWindow::span_closure(&x, &gens, 4).unwrap();
        let fl = n.quotient_finite_length().unwrap();
        assert_eq!(fl.top, Some(0));
        assert_eq!(is_weakly_m_full(&n, 4).unwrap().verdict, Verdict::Holds);
        assert_eq!(is_faithful(&x, 4).verdict, Verdict::Holds);
    }

    #[test]
    fn annihilators() {
        let x3 = ring(&["x"], &["x^3"]);
        let r = PresentedModule::ring_module(&x3);
        assert!(annihilator_window(&r, 4).is_zero());
        assert_eq!(is_faithful(&r, 4).verdict, Verdict::Holds);
        let q = PresentedModule::cyclic(&x3, &[poly(&x3, "x")]).unwrap();
        assert_eq!(dims(&annihilator_window(&q, 3), 3), vec![0, 1, 1, 0]);
        assert_eq!(is_faithful(&q, 4).verdict, Verdict::Fails);
        let ideal = presentation_of(&r, &[(1, r.cover().coords_at(&[poly(&x3, "x")], 1).unwrap())], 4).unwrap();
        assert_eq!(dims(&annihilator_window(&ideal, 3), 3), vec![0, 0, 1, 0]);
    }

    #[test]
    fn hom_examples() {
        let x2 = ring(&["x"], &["x^2"]);
        let r = PresentedModule::ring_module(&x2);
        let k = PresentedModule::residue_field(&x2);
        let m = maximal_ideal_module(&x2);
        for d in -1..3 {
            assert_eq!(hom_space(&r, &r, d).unwrap().dim(), r.dim(d));
        }
        let h = hom_space(&m, &k, -1).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(hom_space(&k, &r, 0).unwrap().dim(), 0);
        assert_eq!(hom_space(&k, &r, 1).unwrap().dim(), 1);
    }

    #[test]
    fn trace_examples() {
        let x2 = ring(&["x"], &["x^2"]);
        let r = PresentedModule::ring_module(&x2);
        let k = PresentedModule::residue_field(&x2);
        let m = maximal_ideal_module(&x2);
        assert_eq!(dims(&trace_window(&r, &r, 3).unwrap(), 3), vec![1, 1, 0, 0]);
        assert_eq!(dims(&trace_window(&m, &r, 3).unwrap(), 3), vec![0, 1, 0, 0]);
        assert_eq!(dims(&trace_window(&m, &k, 3).unwrap(), 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn embeddable_examples() {
        let x2 = ring(&["x"], &["x^2"]);
        let k = PresentedModule::residue_field(&x2);
        assert_eq!(burch_embeddable(&k, 3).unwrap().verdict, Verdict::Holds);
        assert_eq!(burch_embeddable(&PresentedModule::ring_module(&x2), 3).unwrap().verdict, Verdict::Fails);
        let x3 = ring(&["x"], &["x^3"]);
        let m = maximal_ideal_module(&x3);
        assert_eq!(burch_embeddable(&m, 3).unwrap().verdict, Verdict::Holds);
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(burch_embeddable(&PresentedModule::ring_module(&r), 3).unwrap().verdict, Verdict::Fails);
    }

    #[test]
    fn burch_forms_agree_on_all_monomial_ideals() {
        let r = ring(&["x", "y"], &["x^3", "y^3"]);
        let mons = ["x", "y", "x^2", "x*y", "y^2", "x^2*y", "x*y^2"];
        for mask in 0u32..(1 << mons.len()) {
            let gens: Vec<&str> = (0..mons.len()).filter(|i| mask >> i & 1 == 1).map(|i| mons[i]).collect();
            let n = ideal_window(&r, &gens, 7);
            let c = is_burch(&n, 7).unwrap();
            assert!(c.verdict.is_exact());
        }
    }
}
