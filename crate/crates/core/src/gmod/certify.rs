//! Burch, weakly m-full, m-full and faithfulness checks with certificates.
//!
//! A difference found inside the window is always exact. The absence of a
//! difference is exact only when the quotient `X/N` is certified to have
//! finite length with top degree `e` and the window reaches `e + 2`.

use serde::Serialize;

use crate::exactla::Scalar;
use crate::gmod::module::Module;
use crate::gmod::window::{format_cover_vector, SubmoduleWindow};
use crate::gmod::ModError;
use crate::ring::RingElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    HoldsInWindow,
    FailsInWindow,
}

impl Verdict {
    pub fn is_exact(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::Fails)
    }

    /// `true` for holds and holds-in-window.
    pub fn positive(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsInWindow)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsInWindow => "holds-in-window",
            Verdict::FailsInWindow => "fails-in-window",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: i64,
    pub element: String,
    #[serde(skip)]
    pub coords: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub window: i64,
    /// Smallest window that would make a window-qualified verdict exact, when
    /// the quotient is certified finite length.
    pub needed_window: Option<i64>,
}

impl Certificate {
    /// `Some(answer)` for exact verdicts.
    pub fn exact(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            _ => None,
        }
    }

    pub fn require_exact(self) -> Result<Certificate, ModError> {
        if self.verdict.is_exact() {
            Ok(self)
        } else {
            Err(ModError::InsufficientWindow { window: self.window, needed: self.needed_window })
        }
    }
}

fn witness(x: &Module, d: i64, v: Vec<Scalar>) -> Witness {
    Witness { degree: d, element: format_cover_vector(x, d, &v), coords: v }
}

/// `Some(needed)` when `X/N` is certified finite length; the window needed
/// for exact negative answers is `top + 2`.
fn certification(n: &SubmoduleWindow) -> Option<i64> {
    let fl = n.quotient_finite_length()?;
    Some(fl.top.map_or(fl.vanishing_degree, |e| (e + 2).max(fl.vanishing_degree)))
}

fn check_window(n: &SubmoduleWindow, d: i64) -> Result<SubmoduleWindow, ModError> {
    if n.hi() < d {
        return Err(ModError::WindowTooSmall { have: n.hi(), need: d });
    }
    Ok(n.restrict(d))
}

/// Burch test: `m(N :_X m) ≠ mN`, cross-checked against `(mN :_X m) ≠ (N :_X m)`.
pub fn is_burch(n: &SubmoduleWindow, d: i64) -> Result<Certificate, ModError> {
    let n = check_window(n, d)?;
    let colon = n.colon_m(); // up to d - 1
    let mn = n.m_multiple(); // up to d
    // m(N:m) in degree e needs (N:m) in degree e - 1, so it is known up to d.
    let m_colon = colon.m_multiple_extended();
    let definitional = m_colon.first_excess(&mn, d);
    let mn_colon = mn.colon_m();
    let colon_form = colon.first_excess(&mn_colon, d - 1);
    if definitional.is_some() != colon_form.is_some() {
        return Err(ModError::Internal("Burch forms disagree".into()));
    }
    let needed = certification(&n);
    let verdict = match (&definitional, needed) {
        (Some(_), _) => Verdict::Holds,
        (None, Some(need)) if d >= need => Verdict::Fails,
        (None, _) => Verdict::FailsInWindow,
    };
    Ok(Certificate {
        verdict,
        witness: definitional.map(|(e, v)| witness(n.ambient(), e, v)),
        window: d,
        needed_window: needed,
    })
}

/// Weakly m-full test: `(mN :_X m) = N`.
pub fn is_weakly_m_full(n: &SubmoduleWindow, d: i64) -> Result<Certificate, ModError> {
    let n = check_window(n, d)?;
    let w = n.m_multiple().colon_m();
    let excess = w.first_excess(&n, d - 1);
    let needed = certification(&n);
    let verdict = match (&excess, needed) {
        (Some(_), _) => Verdict::Fails,
        (None, Some(need)) if d >= need => Verdict::Holds,
        (None, _) => Verdict::HoldsInWindow,
    };
    Ok(Certificate { verdict, witness: excess.map(|(e, v)| witness(n.ambient(), e, v)), window: d, needed_window: needed })
}

/// m-full test with a given element: `(mN :_X x) = N`.
pub fn is_m_full_with(n: &SubmoduleWindow, x: &RingElem, d: i64) -> Result<Certificate, ModError> {
    let n = check_window(n, d)?;
    let e = match x.degree() {
        Some(e) if e > 0 => e as i64,
        _ => return Err(ModError::DegreeZeroGenerator),
    };
    let w = n.m_multiple().colon_by_element(x)?;
    let excess = w.first_excess(&n, d - e);
    let needed = certification(&n).map(|need| need + e - 1);
    let verdict = match (&excess, needed) {
        (Some(_), _) => Verdict::Fails,
        (None, Some(need)) if d >= need => Verdict::Holds,
        (None, _) => Verdict::HoldsInWindow,
    };
    Ok(Certificate { verdict, witness: excess.map(|(e, v)| witness(n.ambient(), e, v)), window: d, needed_window: needed })
}

/// `ann(M)` as an ideal window up to `d`.
pub fn annihilator_window(m: &Module, d: i64) -> SubmoduleWindow {
    let top = m.max_generator_degree().unwrap_or(0);
    SubmoduleWindow::full(m, top).annihilator(d)
}

/// Faithfulness of `M`. Exact over Artinian rings (the annihilator lives
/// below the socle bound) and when some generator occurs in no relation (a
/// free summand); window-qualified otherwise.
pub fn is_faithful(m: &Module, d: i64) -> Certificate {
    let ring = m.ring();
    let r = crate::gmod::module::PresentedModule::ring_module(ring);
    let (hi, exact) = match ring.socle_bound() {
        Some(s) => (s as i64 - 1, true),
        None => (d, false),
    };
    let ann = annihilator_window(m, hi);
    if let Some((e, v)) = (0..=hi).find_map(|e| {
        let c = ann.component(e);
        c.basis().first().map(|v| (e, v.clone()))
    }) {
        return Certificate { verdict: Verdict::Fails, witness: Some(witness(&r, e, v)), window: hi, needed_window: None };
    }
    let free_summand = m.relations().columns().is_empty()
        || (0..m.cover().rank()).any(|i| m.relations().columns().iter().all(|c| c[i].is_zero()));
    let verdict = if exact || free_summand { Verdict::Holds } else { Verdict::HoldsInWindow };
    Certificate { verdict, witness: None, window: hi, needed_window: None }
}
