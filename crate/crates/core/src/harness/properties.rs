//! Contrapositives of the rigidity statements evaluated on random instances, using certified
//! quantities only.

use serde::Serialize;

use crate::exactla::Scalar;
use crate::gmod::certify::{is_burch, is_faithful, is_weakly_m_full, Certificate, Verdict};
use crate::gmod::free::{FreeModule, ModuleMap};
use crate::gmod::hom::{burch_embeddable, presentation_of, window_module};
use crate::gmod::kernel::project_columns;
use crate::gmod::module::{Module, PresentedModule};
use crate::gmod::window::SubmoduleWindow;
use crate::gmod::{socle_dims, ModError};
use crate::harness::generate::{Built, InstanceSpec};
use crate::resolve::{entry_ideal, ext_from, suggest_window, tor_auto, tor_from, HomologyReport, Resolution};
use crate::ring::RingElem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Checked,
    /// The hypotheses do not apply to this instance.
    Vacuous,
    /// A needed quantity could not be certified.
    Skipped(String),
    Violation(String),
}

/// Property ids and what each one checks.
pub const PROPERTIES: &[(&str, &str)] = &[
    ("burch-has-socle", "N Burch in X implies Soc(X/N) != 0"),
    ("burch-forms-agree", "m(N:m) != mN exactly when (mN:m) != (N:m)"),
    ("mN-is-burch", "mN != 0 implies mN is Burch in X"),
    ("weakly-full-with-socle-is-burch", "N weakly m-full with Soc(X/N) != 0 implies N Burch"),
    ("colon-is-weakly-full", "(N:m) is weakly m-full in X"),
    ("weakly-full-restricts", "N weakly m-full in X implies N weakly m-full in (N:m)"),
    ("burch-has-ext1-k", "N Burch implies Ext^1(k, N) != 0"),
    ("tor1-gives-tensor", "Tor_1(L, R/I) = 0 implies I (x) L = IL, componentwise"),
    ("colon-composition", "(N : J'J'') = ((N : J') : J'')"),
    ("complex", "the resolution is a complex"),
    ("minimal", "no differential entry is a unit"),
    ("exact", "the resolution has no homology in the window"),
    ("tor-symmetry", "Tor(M, X/N) = Tor(X/N, M) on certified entries"),
    ("tor-mN-entries-kill-N", "Tor_t(M, mN) = 0 implies I_1(d_{t+1}) kills N"),
    ("tor-mN-pair-forces-free", "Tor_t(M, mN) = Tor_{t+1}(M, mN) = 0 implies F_{t+1} = 0 or mN = 0"),
    ("burch-quotient-tor-pair", "N Burch, M nonfree: never Tor_t(M, X/N) = Tor_{t+1}(M, X/N) = 0"),
    ("burch-tor-pair", "N Burch, M nonfree: never Tor_{t-1}(M, N) = Tor_t(M, N) = 0"),
    ("burch-ext-pair", "N Burch, M nonfree: never Ext^t(M, N) = Ext^{t+1}(M, N) = 0"),
    ("weakly-full-tor", "N weakly m-full in mX, X faithful, M nonfree: Tor_t(M, N) != 0 for t >= 1"),
    ("weakly-full-quotient-tor", "N weakly m-full in mX: Tor_t(M, X/N) = 0 gives I_1(d_t) in ann X, and no vanishing for nonfree M when X is faithful"),
    ("power-mN-tor", "m^n N != 0, M nonfree: none of the three Tor vanishing pairs for m^n N occurs"),
    ("j-full-entries", "(N:J) = (mN:mJ), N in mJX, Tor_t(M, X/N) = 0 imply I_1(d_t) kills JX"),
    ("free-not-burch-embeddable", "a free module is not isomorphic to a Burch submodule"),
];

struct Ctx {
    b: Built,
    imax: usize,
    s: i64,
    res: Resolution,
    nonfree: bool,
    burch: Result<Certificate, ModError>,
    wmf: Certificate,
    socle: bool,
    mn: SubmoduleWindow,
    tor_q: HomologyReport,
    tor_n: HomologyReport,
}

fn vanish(r: &HomologyReport, i: usize) -> Option<bool> {
    r.vanishes(i)
}

fn unit_ideal_gens(ring: &crate::ring::Ring) -> Vec<RingElem> {
    (0..ring.nvars()).map(|i| RingElem::var(ring, i)).collect()
}

fn rows_summary(r: &HomologyReport) -> String {
    r.rows
        .iter()
        .map(|row| format!("{}:{:?}", row.i, row.vanishes()))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Evaluates every property on one instance, in [`PROPERTIES`] order.
pub fn evaluate(spec: &InstanceSpec) -> Vec<(&'static str, Outcome)> {
    let b = spec.build();
    let res = Resolution::compute(&b.m, spec.imax + 1, spec.window).expect("window covers the generators");
    evaluate_with(spec, b, res)
}

/// Like [`evaluate`] but on a given (possibly tampered) resolution of `M`.
pub fn evaluate_with(spec: &InstanceSpec, b: Built, res: Resolution) -> Vec<(&'static str, Outcome)> {
    let imax = spec.imax;
    let s = b.ring.socle_bound().expect("Artinian") as i64;
    let nonfree = res.betti(1) > 0;
    let burch = is_burch(&b.n, b.hi);
    let wmf = is_weakly_m_full(&b.n, b.hi).expect("window is inside N's window");
    let socle = socle_dims(&b.n).iter().any(|&(_, c)| c > 0);
    let mn = b.n.m_multiple();
    let tor_q = tor_from(&res, &b.quotient, imax).expect("same ring");
    let tor_n = tor_from(&res, &b.n_module, imax).expect("same ring");
    let ctx = Ctx { b, imax, s, res, nonfree, burch, wmf, socle, mn, tor_q, tor_n };
    let checks: [fn(&Ctx) -> Outcome; 23] = [
        burch_has_socle,
        burch_forms_agree,
        mn_is_burch,
        weakly_full_with_socle_is_burch,
        colon_is_weakly_full,
        weakly_full_restricts,
        burch_has_ext1_k,
        tor1_gives_tensor,
        colon_composition,
        complex,
        minimal,
        exact,
        tor_symmetry,
        tor_mn_entries_kill_n,
        tor_mn_pair_forces_free,
        burch_quotient_tor_pair,
        burch_tor_pair,
        burch_ext_pair,
        weakly_full_tor,
        weakly_full_quotient_tor,
        power_mn_tor,
        j_full_entries,
        free_not_burch_embeddable,
    ];
    PROPERTIES.iter().zip(checks).map(|(&(id, _), f)| (id, f(&ctx))).collect()
}

fn burch_holds(c: &Ctx) -> bool {
    matches!(&c.burch, Ok(cert) if cert.verdict == Verdict::Holds)
}

fn burch_has_socle(c: &Ctx) -> Outcome {
    if !burch_holds(c) {
        return Outcome::Vacuous;
    }
    if c.socle {
        Outcome::Checked
    } else {
        Outcome::Violation("Burch verdict with zero socle of X/N".into())
    }
}

fn burch_forms_agree(c: &Ctx) -> Outcome {
    let windows = [c.b.n.clone(), c.mn.clone(), c.b.n.colon_m()];
    for w in &windows {
        if let Err(e) = is_burch(w, w.hi()) {
            return Outcome::Violation(e.to_string());
        }
    }
    Outcome::Checked
}

fn mn_is_burch(c: &Ctx) -> Outcome {
    if c.mn.is_zero() {
        return Outcome::Vacuous;
    }
    match is_burch(&c.mn, c.mn.hi()) {
        Ok(cert) => match cert.verdict {
            Verdict::Holds => Outcome::Checked,
            Verdict::FailsInWindow => Outcome::Skipped("not certified".into()),
            v => Outcome::Violation(format!("mN verdict {}", v.as_str())),
        },
        Err(e) => Outcome::Violation(e.to_string()),
    }
}

fn weakly_full_with_socle_is_burch(c: &Ctx) -> Outcome {
    match c.wmf.verdict {
        Verdict::Holds if c.socle => match &c.burch {
            Ok(cert) if cert.verdict == Verdict::Holds => Outcome::Checked,
            Ok(cert) if cert.verdict == Verdict::FailsInWindow => Outcome::Skipped("Burch not certified".into()),
            Ok(cert) => Outcome::Violation(format!("weakly m-full with socle, Burch verdict {}", cert.verdict.as_str())),
            Err(e) => Outcome::Violation(e.to_string()),
        },
        Verdict::HoldsInWindow => Outcome::Skipped("weakly m-full not certified".into()),
        _ => Outcome::Vacuous,
    }
}

fn colon_is_weakly_full(c: &Ctx) -> Outcome {
    let colon = c.b.n.colon_m();
    match is_weakly_m_full(&colon, colon.hi()) {
        Ok(cert) => match cert.verdict {
            Verdict::Holds => Outcome::Checked,
            Verdict::HoldsInWindow => Outcome::Skipped("not certified".into()),
            v => Outcome::Violation(format!("(N:m) verdict {}, witness {:?}", v.as_str(), cert.witness.map(|w| w.element))),
        },
        Err(e) => Outcome::Violation(e.to_string()),
    }
}

/// `N` as a submodule of `Y = (N :_X m)`, with `Y` presented on its own
/// minimal generators.
fn inside_colon(c: &Ctx) -> Option<SubmoduleWindow> {
    let x = &c.b.x;
    let y = c.b.n.colon_m();
    let gens = y.minimal_generators();
    let ymod = presentation_of(x, &gens, y.hi()).ok()?;
    let g = FreeModule::new(&c.b.ring, gens.iter().map(|(d, _)| *d).collect());
    let to_x = ModuleMap::from_coords(g, x.cover().clone(), gens.into_iter().map(|(_, v)| v).collect());
    let mut pulled: Vec<(i64, Vec<Scalar>)> = Vec::new();
    for (d, v) in c.b.n.restrict(y.hi()).minimal_generators() {
        let a = project_columns(&to_x.matrix_at(d), &x.rel_space(d));
        let coords = a.membership(&x.quotient_coords(d, &v)).ok()??;
        pulled.push((d, coords));
    }
    Some(SubmoduleWindow::span_closure_coords(&ymod, &pulled, y.hi()))
}

fn weakly_full_restricts(c: &Ctx) -> Outcome {
    match c.wmf.verdict {
        Verdict::Holds => {}
        Verdict::HoldsInWindow => return Outcome::Skipped("weakly m-full not certified".into()),
        _ => return Outcome::Vacuous,
    }
    let Some(inner) = inside_colon(c) else {
        return Outcome::Violation("N does not lift into (N:m)".into());
    };
    match is_weakly_m_full(&inner, inner.hi()) {
        Ok(cert) => match cert.verdict {
            Verdict::Holds => Outcome::Checked,
            Verdict::HoldsInWindow => Outcome::Skipped("not certified in (N:m)".into()),
            v => Outcome::Violation(format!("verdict in (N:m): {}", v.as_str())),
        },
        Err(e) => Outcome::Violation(e.to_string()),
    }
}

fn burch_has_ext1_k(c: &Ctx) -> Outcome {
    if !burch_holds(c) {
        return Outcome::Vacuous;
    }
    let k = PresentedModule::residue_field(&c.b.ring);
    let ext = suggest_window(&k, &c.b.n_module, 1).and_then(|d| {
        let res = Resolution::compute(&k, 2, d)?;
        ext_from(&res, &c.b.n_module, 1)
    });
    match ext.map(|e| e.vanishes(1)) {
        Ok(Some(false)) => Outcome::Checked,
        Ok(Some(true)) => Outcome::Violation("Burch N with Ext^1(k, N) = 0".into()),
        Ok(None) => Outcome::Skipped("Ext^1(k, N) not certified".into()),
        Err(e) => Outcome::Skipped(e.to_string()),
    }
}

fn small_ideals(c: &Ctx) -> Vec<Vec<RingElem>> {
    let r = &c.b.ring;
    let x = RingElem::var(r, 0);
    let y = RingElem::var(r, 1);
    vec![vec![x.clone()], vec![y.mul(&y).expect("same ring")], vec![x, y]]
}

fn tor1_gives_tensor(c: &Ctx) -> Outcome {
    let ring = &c.b.ring;
    let r = PresentedModule::ring_module(ring);
    let mut any = false;
    for l in [&c.b.m, &c.b.quotient] {
        for ideal in small_ideals(c) {
            let r_mod_i = PresentedModule::cyclic(ring, &ideal).expect("homogeneous");
            let vanishes = match tor_auto(&r_mod_i, l, 1) {
                Ok(t) => t.vanishes(1),
                Err(e) => return Outcome::Skipped(e.to_string()),
            };
            match vanishes {
                Some(true) => {}
                Some(false) => continue,
                None => return Outcome::Skipped("Tor_1 not certified".into()),
            }
            any = true;
            let hi = l.max_generator_degree().unwrap_or(0) + c.s + 1;
            let gens: Vec<Vec<RingElem>> = ideal.iter().map(|g| vec![g.clone()]).collect();
            let iw = SubmoduleWindow::span_closure(&r, &gens, hi).expect("homogeneous");
            let i_mod = match window_module(&iw) {
                Ok(m) => m,
                Err(e) => return Outcome::Violation(e.to_string()),
            };
            let tensor = PresentedModule::tensor(&i_mod, l).expect("same ring");
            let il = SubmoduleWindow::full(l, hi).ideal_multiple(&ideal).expect("homogeneous");
            for d in 0..=hi {
                if tensor.dim(d) != il.dim(d) {
                    return Outcome::Violation(format!(
                        "degree {d}: dim (I (x) L) = {}, dim IL = {}",
                        tensor.dim(d),
                        il.dim(d)
                    ));
                }
            }
        }
    }
    if any {
        Outcome::Checked
    } else {
        Outcome::Vacuous
    }
}

fn colon_composition(c: &Ctx) -> Outcome {
    let r = &c.b.ring;
    let x = RingElem::var(r, 0);
    let y = RingElem::var(r, 1);
    let pairs = [(vec![x.clone()], vec![y.clone()]), (unit_ideal_gens(r), vec![x.clone()])];
    for (j1, j2) in pairs {
        let product: Vec<RingElem> = j1.iter().flat_map(|a| j2.iter().map(move |b| a.mul(b).expect("same ring"))).collect();
        let whole = c.b.n.colon(&product).expect("homogeneous");
        let step = c.b.n.colon(&j1).and_then(|w| w.colon(&j2)).expect("homogeneous");
        let upto = whole.hi().min(step.hi());
        if let Some((d, v)) = whole.first_excess(&step, upto).or_else(|| step.first_excess(&whole, upto)) {
            return Outcome::Violation(format!("differ in degree {d}: {}", c.b.n.format_vector(d, &v)));
        }
    }
    Outcome::Checked
}

/// The checks that only look at the resolution itself.
pub fn structural(res: &Resolution) -> Vec<(&'static str, Outcome)> {
    vec![("complex", complex_check(res)), ("minimal", minimal_check(res))]
}

fn complex(c: &Ctx) -> Outcome {
    complex_check(&c.res)
}

fn minimal(c: &Ctx) -> Outcome {
    minimal_check(&c.res)
}

fn complex_check(res: &Resolution) -> Outcome {
    if res.check_complex() {
        Outcome::Checked
    } else {
        Outcome::Violation("a composite of differentials is nonzero".into())
    }
}

fn minimal_check(res: &Resolution) -> Outcome {
    if res.check_minimal() {
        Outcome::Checked
    } else {
        Outcome::Violation("a differential has a unit entry".into())
    }
}

fn exact(c: &Ctx) -> Outcome {
    let t = c.res.length();
    for i in 0..t {
        for d in 0..=c.res.window() {
            let h = c.res.homology_dim(i, d);
            if h != 0 {
                return Outcome::Violation(format!("homology at F_{i} in degree {d}: {h}"));
            }
        }
    }
    Outcome::Checked
}

fn tor_symmetry(c: &Ctx) -> Outcome {
    let imax = c.imax.min(2);
    let other = suggest_window(&c.b.quotient, &c.b.m, imax).and_then(|d| {
        let res = Resolution::compute(&c.b.quotient, imax + 1, d)?;
        tor_from(&res, &c.b.m, imax)
    });
    let other = match other {
        Ok(t) => t,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    for i in 0..=imax {
        let a = c.tor_q.row(i);
        let b = other.row(i);
        for (d, va) in &a.entries {
            let vb = b.entries.iter().find(|(e, _)| e == d).map(|(_, v)| *v).unwrap_or(if b.full { Some(0) } else { None });
            if let (Some(x), Some(y)) = (va, vb) {
                if *x != y {
                    return Outcome::Violation(format!("Tor_{i} in degree {d}: {x} vs {y}"));
                }
            }
        }
        if let (Some(x), Some(y)) = (a.vanishes(), b.vanishes()) {
            if x != y {
                return Outcome::Violation(format!("Tor_{i} vanishing differs"));
            }
        }
    }
    Outcome::Checked
}

fn mn_tor(c: &Ctx) -> Result<HomologyReport, String> {
    let module = window_module(&c.mn).map_err(|e| e.to_string())?;
    tor_from(&c.res, &module, c.imax).map_err(|e| e.to_string())
}

fn tor_mn_entries_kill_n(c: &Ctx) -> Outcome {
    let tor = match mn_tor(c) {
        Ok(t) => t,
        Err(e) => return Outcome::Skipped(e),
    };
    let ann = c.b.n.annihilator(c.s);
    let mut any = false;
    for t in 0..=c.imax {
        match vanish(&tor, t) {
            Some(true) => {
                any = true;
                if !entry_ideal(c.res.differential(t + 1), c.s).is_subset_of(&ann) {
                    return Outcome::Violation(format!("Tor_{t}(M, mN) = 0 but I_1(d_{}) does not kill N", t + 1));
                }
            }
            Some(false) => {}
            None => return Outcome::Skipped(format!("Tor_{t}(M, mN) not certified")),
        }
    }
    if any {
        Outcome::Checked
    } else {
        Outcome::Vacuous
    }
}

fn tor_mn_pair_forces_free(c: &Ctx) -> Outcome {
    let tor = match mn_tor(c) {
        Ok(t) => t,
        Err(e) => return Outcome::Skipped(e),
    };
    let mut any = false;
    for t in 0..c.imax {
        match (vanish(&tor, t), vanish(&tor, t + 1)) {
            (Some(true), Some(true)) => {
                any = true;
                if c.res.betti(t + 1) != 0 && !c.mn.is_zero() {
                    return Outcome::Violation(format!(
                        "Tor_{t} = Tor_{} = 0 with beta_{} = {} and mN != 0",
                        t + 1,
                        t + 1,
                        c.res.betti(t + 1)
                    ));
                }
            }
            (Some(_), Some(_)) => {}
            _ => return Outcome::Skipped("Tor(M, mN) not certified".into()),
        }
    }
    if any {
        Outcome::Checked
    } else {
        Outcome::Vacuous
    }
}

/// Fails when two consecutive rows `(t - lag, t)` both vanish for some `t`.
fn no_vanishing_pair(a: &HomologyReport, b: &HomologyReport, ts: impl Iterator<Item = (usize, usize)>, what: &str) -> Outcome {
    for (i, j) in ts {
        match (a.vanishes(i), b.vanishes(j)) {
            (Some(true), Some(true)) => {
                return Outcome::Violation(format!("{what}: rows {i} and {j} both vanish [{}]", rows_summary(a)))
            }
            (Some(_), Some(_)) => {}
            _ => return Outcome::Skipped(format!("{what}: rows {i}, {j} not certified")),
        }
    }
    Outcome::Checked
}

fn burch_quotient_tor_pair(c: &Ctx) -> Outcome {
    if !burch_holds(c) || !c.nonfree {
        return Outcome::Vacuous;
    }
    no_vanishing_pair(&c.tor_q, &c.tor_q, (1..c.imax).map(|t| (t, t + 1)), "Tor(M, X/N)")
}

fn burch_tor_pair(c: &Ctx) -> Outcome {
    if !burch_holds(c) || !c.nonfree {
        return Outcome::Vacuous;
    }
    no_vanishing_pair(&c.tor_n, &c.tor_n, (1..=c.imax).map(|t| (t - 1, t)), "Tor(M, N)")
}

fn burch_ext_pair(c: &Ctx) -> Outcome {
    if !burch_holds(c) || !c.nonfree {
        return Outcome::Vacuous;
    }
    let ext = match ext_from(&c.res, &c.b.n_module, c.imax) {
        Ok(e) => e,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    no_vanishing_pair(&ext, &ext, (1..c.imax).map(|t| (t, t + 1)), "Ext(M, N)")
}

/// Hypotheses shared by the weakly m-full statements: `N` weakly m-full and
/// `N ⊆ mX` (`X/N` has finite length over an Artinian ring).
fn weakly_full_setting(c: &Ctx) -> Result<bool, Outcome> {
    match c.wmf.verdict {
        Verdict::Holds => {}
        Verdict::HoldsInWindow => return Err(Outcome::Skipped("weakly m-full not certified".into())),
        _ => return Err(Outcome::Vacuous),
    }
    let mx = SubmoduleWindow::full(&c.b.x, c.b.hi).m_multiple();
    if !c.b.n.is_subset_of(&mx) {
        return Err(Outcome::Vacuous);
    }
    Ok(is_faithful(&c.b.x, c.b.hi).verdict == Verdict::Holds)
}

fn weakly_full_tor(c: &Ctx) -> Outcome {
    let faithful = match weakly_full_setting(c) {
        Ok(f) => f,
        Err(o) => return o,
    };
    if !faithful || !c.nonfree {
        return Outcome::Vacuous;
    }
    for t in 1..=c.imax {
        match vanish(&c.tor_n, t) {
            Some(true) => return Outcome::Violation(format!("X faithful, M nonfree, Tor_{t}(M, N) = 0")),
            Some(false) => {}
            None => return Outcome::Skipped(format!("Tor_{t}(M, N) not certified")),
        }
    }
    Outcome::Checked
}

fn weakly_full_quotient_tor(c: &Ctx) -> Outcome {
    let faithful = match weakly_full_setting(c) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let ann_x = SubmoduleWindow::full(&c.b.x, c.b.hi).annihilator(c.s);
    for t in 1..=c.imax {
        match vanish(&c.tor_q, t) {
            Some(true) => {
                if !entry_ideal(c.res.differential(t), c.s).is_subset_of(&ann_x) {
                    return Outcome::Violation(format!("Tor_{t}(M, X/N) = 0 but I_1(d_{t}) does not kill X"));
                }
                if faithful && c.nonfree {
                    return Outcome::Violation(format!("X faithful, M nonfree, Tor_{t}(M, X/N) = 0"));
                }
            }
            Some(false) => {}
            None => return Outcome::Skipped(format!("Tor_{t}(M, X/N) not certified")),
        }
    }
    Outcome::Checked
}

fn power_mn_tor(c: &Ctx) -> Outcome {
    if !c.nonfree {
        return Outcome::Vacuous;
    }
    let mut power = c.b.n.clone();
    let mut any = false;
    for n in 1..=2 {
        power = power.m_multiple();
        if power.is_zero() {
            break;
        }
        any = true;
        let gens = power.generator_elements();
        let quotient = PresentedModule::quotient(&c.b.x, &gens).expect("homogeneous");
        let module = match window_module(&power) {
            Ok(m) => m,
            Err(e) => return Outcome::Violation(e.to_string()),
        };
        let tq = tor_from(&c.res, &quotient, c.imax).expect("same ring");
        let tp = tor_from(&c.res, &module, c.imax).expect("same ring");
        let what = format!("m^{n}N");
        for outcome in [
            no_vanishing_pair(&tq, &tq, (1..c.imax).map(|t| (t, t + 1)), &format!("{what}: Tor(M, X/P) pair")),
            no_vanishing_pair(&tq, &tp, (1..=c.imax).map(|t| (t, t)), &format!("{what}: Tor_t(M, X/P), Tor_t(M, P)")),
            no_vanishing_pair(&tp, &tp, (1..=c.imax).map(|t| (t - 1, t)), &format!("{what}: Tor(M, P) pair")),
        ] {
            if outcome != Outcome::Checked {
                return outcome;
            }
        }
    }
    if any {
        Outcome::Checked
    } else {
        Outcome::Vacuous
    }
}

fn j_full_entries(c: &Ctx) -> Outcome {
    let r = &c.b.ring;
    let vars = unit_ideal_gens(r);
    let mut any = false;
    for j in [vec![RingElem::var(r, 0)], vars.clone()] {
        let mj: Vec<RingElem> = vars.iter().flat_map(|v| j.iter().map(move |g| v.mul(g).expect("same ring"))).collect();
        let full = SubmoduleWindow::full(&c.b.x, c.b.hi);
        let mjx = full.ideal_multiple(&mj).expect("homogeneous");
        if !c.b.n.is_subset_of(&mjx) {
            continue;
        }
        let left = c.b.n.colon(&j).expect("homogeneous");
        let right = c.mn.colon(&mj).expect("homogeneous");
        if !left.equal_upto(&right, left.hi().min(right.hi())) {
            continue;
        }
        let ann = full.ideal_multiple(&j).expect("homogeneous").annihilator(c.s);
        for t in 1..=c.imax {
            match vanish(&c.tor_q, t) {
                Some(true) => {
                    any = true;
                    if !entry_ideal(c.res.differential(t), c.s).is_subset_of(&ann) {
                        return Outcome::Violation(format!("Tor_{t}(M, X/N) = 0 but I_1(d_{t}) does not kill JX"));
                    }
                }
                Some(false) => {}
                None => return Outcome::Skipped(format!("Tor_{t}(M, X/N) not certified")),
            }
        }
    }
    if any {
        Outcome::Checked
    } else {
        Outcome::Vacuous
    }
}

fn free_not_burch_embeddable(c: &Ctx) -> Outcome {
    let x = &c.b.x;
    let free: Module =
        if x.relations().columns().is_empty() { x.clone() } else { PresentedModule::ring_module(&c.b.ring) };
    match burch_embeddable(&free, c.b.hi) {
        Ok(cert) => match cert.verdict {
            Verdict::Fails => Outcome::Checked,
            Verdict::FailsInWindow => Outcome::Skipped("not certified".into()),
            v => Outcome::Violation(format!("free module verdict {}", v.as_str())),
        },
        Err(e) => Outcome::Violation(e.to_string()),
    }
}
