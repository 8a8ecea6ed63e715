//! Worked examples reproduced as fixtures. The two k[u,v]/(uv) examples are
//! graded stand-ins for constructions over a regular local ring.

use crate::exactla::Field;
use crate::gmod::certify::{is_burch, is_faithful, is_m_full_with, is_weakly_m_full, Verdict};
use crate::gmod::window::SubmoduleWindow;
use crate::gmod::ModError;
use crate::harness::{CheckResult, FixtureResult, SuiteReport};
use crate::instance::{parse_instance, Instance};
use crate::resolve::{ext_auto, tor_auto, HomologyRow, Resolution, ResolveError};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub const BURCH_NOT_RIGID: &str = include_str!("../../fixtures/burch_not_rigid.inst");
pub const UV_PAIR: &str = include_str!("../../fixtures/uv_pair.inst");
pub const UV_WEAKLY_FULL: &str = include_str!("../../fixtures/uv_weakly_full.inst");
pub const UV_COLON: &str = include_str!("../../fixtures/uv_colon.inst");

/// Fixture ids in run order.
pub const FIXTURES: &[&str] = &["F1", "F2", "F3", "F4", "F5", "F6"];

#[derive(Debug, thiserror::Error)]
enum FixtureError {
    #[error(transparent)]
    Mod(#[from] ModError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("{0}")]
    Setup(String),
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, claim: &str, expected: impl ToString, computed: impl ToString, pass: bool) {
        self.0.push(CheckResult {
            claim: claim.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, claim: &str, expected: T, computed: T) {
        let pass = expected == computed;
        self.push(claim, format!("{expected:?}"), format!("{computed:?}"), pass);
    }
}

fn field_name(field: Field) -> String {
    match field.characteristic() {
        0 => "QQ".to_string(),
        p => format!("F_{p}"),
    }
}

/// Builds a fixture file over `field`.
pub fn load(text: &str, field: Field) -> Result<Instance, String> {
    let text = text.replace("char = 32003", &format!("char = {}", field.characteristic()));
    parse_instance(&text).and_then(|f| f.build()).map_err(|e| e.to_string())
}

fn module<'a>(inst: &'a Instance, name: &str) -> Result<&'a crate::gmod::Module, FixtureError> {
    inst.module(name).ok_or_else(|| FixtureError::Setup(format!("fixture lacks module {name}")))
}

fn window(inst: &Instance, name: &str, hi: i64) -> Result<SubmoduleWindow, FixtureError> {
    inst.window(name, hi).ok_or_else(|| FixtureError::Setup(format!("fixture lacks submodule {name}")))
}

fn describe(row: &HomologyRow) -> String {
    match (row.vanishes(), row.witness_degree()) {
        (Some(true), _) => "0".into(),
        (Some(false), Some(d)) => format!("nonzero (degree {d})"),
        (Some(false), None) => "nonzero".into(),
        (None, _) => "not certified".into(),
    }
}

fn vanishing(checks: &mut Checks, claim: &str, row: &HomologyRow, expect_zero: bool) {
    let pass = row.vanishes() == Some(expect_zero);
    checks.push(claim, if expect_zero { "0" } else { "nonzero" }, describe(row), pass);
}

fn f1(c: &mut Checks) -> Result<(), FixtureError> {
    let h = NumericalSemigroup::parse("9,10,61,62")?;
    c.eq("pseudo-Frobenius numbers", vec![51, 52, 53], h.pseudo_frobenius());
    let s = h.surjection_criterion()?;
    c.eq("surjection criterion (both routes)", (true, true), (s.via_pf, s.via_colon));
    c.eq("minimal multiplicity", false, h.profile().minimal_multiplicity);
    c.eq("nearly Gorenstein", false, h.is_nearly_gorenstein());
    c.eq("m isomorphic to its canonical dual", false, h.is_self_dual());
    Ok(())
}

fn f2(c: &mut Checks, field: Field) -> Result<(), FixtureError> {
    let inst = load(BURCH_NOT_RIGID, field).map_err(FixtureError::Setup)?;
    let n = window(&inst, "N", 6)?;
    let burch = is_burch(&n, 6)?;
    let witness = burch.witness.as_ref().map(|w| w.element.clone()).unwrap_or_default();
    c.push(
        "N is Burch, witness",
        "holds, x*y",
        format!("{}, {witness}", burch.verdict.as_str()),
        burch.verdict == Verdict::Holds && witness == "x*y",
    );
    let q = module(&inst, "XmodN")?;
    let tor = tor_auto(module(&inst, "M")?, q, 2)?;
    vanishing(c, "Tor_1(M, X/N)", tor.row(1), true);
    vanishing(c, "Tor_2(M, X/N)", tor.row(2), false);
    // X = R is free, so Tor_i(R/wR, N) = Tor_{i+1}(R/wR, X/N) for i >= 1.
    let tw = tor_auto(module(&inst, "Rw")?, q, 3)?;
    vanishing(c, "Tor_1(R/wR, N), as Tor_2(R/wR, X/N)", tw.row(2), true);
    vanishing(c, "Tor_2(R/wR, N), as Tor_3(R/wR, X/N)", tw.row(3), false);
    Ok(())
}

fn f3(c: &mut Checks, field: Field) -> Result<(), FixtureError> {
    let inst = load(UV_PAIR, field).map_err(FixtureError::Setup)?;
    let (ru, rv) = (module(&inst, "Ru")?, module(&inst, "Rv")?);
    vanishing(c, "Tor_1(R/u, R/v)", tor_auto(ru, rv, 1)?.row(1), true);
    vanishing(c, "Ext^1(R/u, R/u)", ext_auto(ru, ru, 1)?.row(1), true);
    let res = Resolution::compute(ru, 6, 7)?;
    let complete = (0..=6).all(|i| res.is_complete(i));
    let betti: Vec<usize> = (0..=6).map(|i| res.betti(i)).collect();
    c.push("Betti numbers of R/u, i <= 6", format!("{:?}", vec![1; 7]), format!("{betti:?}"), complete && betti == vec![1; 7]);
    Ok(())
}

fn f4(c: &mut Checks, field: Field) -> Result<(), FixtureError> {
    let inst = load(UV_WEAKLY_FULL, field).map_err(FixtureError::Setup)?;
    let x = module(&inst, "X")?;
    let n = window(&inst, "N", 4)?;
    c.eq("N weakly m-full", "holds", is_weakly_m_full(&n, 4)?.verdict.as_str());
    let q = module(&inst, "XmodN")?;
    let dims: Vec<usize> = (0..=3).map(|d| q.dim(d)).collect();
    let fl = n.quotient_finite_length();
    c.push(
        "X/N is k",
        "dims [1, 0, 0, 0], finite length",
        format!("dims {dims:?}, finite length {}", fl.is_some()),
        dims == [1, 0, 0, 0] && fl.is_some(),
    );
    c.eq("X faithful", "holds", is_faithful(x, 4).verdict.as_str());
    let ru = module(&inst, "Ru")?;
    vanishing(c, "Tor_1(R/u, N)", tor_auto(ru, module(&inst, "NN")?, 1)?.row(1), true);
    let res = Resolution::compute(ru, 1, 2)?;
    c.push("R/u nonfree", "beta_1 = 1", format!("beta_1 = {}", res.betti(1)), res.betti(1) == 1 && res.is_complete(1));
    Ok(())
}

fn f5(c: &mut Checks, field: Field) -> Result<(), FixtureError> {
    let inst = load(UV_COLON, field).map_err(FixtureError::Setup)?;
    // (u+v) contains m^2, so the colon is generated in degrees <= 1 and any
    // window past degree 2 sees all of its generators.
    let l = window(&inst, "P", 6)?.colon_m();
    let mu = l.generator_count();
    let ext = ext_auto(module(&inst, "k")?, module(&inst, "R")?, 1)?;
    let row = ext.row(1);
    let certified = row.vanishes().is_some();
    c.push(
        "mu(((u+v) : m)) = 1 + dim Ext^1(k, R)",
        "equal",
        format!("mu = {mu}, dim Ext^1 = {}{}", row.total(), if certified { "" } else { " (not certified)" }),
        certified && mu == 1 + row.total(),
    );
    Ok(())
}

fn f6(c: &mut Checks, field: Field) -> Result<(), FixtureError> {
    let inst = load(UV_COLON, field).map_err(FixtureError::Setup)?;
    let r = module(&inst, "R")?;
    let x = inst.elements.get("x").ok_or_else(|| FixtureError::Setup("fixture lacks element x".into()))?;
    let mut first = None;
    let mut power = SubmoduleWindow::full(r, 10);
    for n in 1..=4 {
        power = power.m_multiple();
        if is_m_full_with(&power, x, 10)?.verdict == Verdict::Holds {
            first = Some(n);
            break;
        }
    }
    c.push(
        "m^n is m-full via u+v for some n <= 4",
        "some n <= 4",
        first.map_or("none".to_string(), |n| format!("n = {n}")),
        first.is_some(),
    );
    Ok(())
}

/// Runs one fixture; F1 ignores `field`.
pub fn run_fixture(id: &str, field: Field) -> FixtureResult {
    let mut c = Checks(Vec::new());
    let outcome = match id {
        "F1" => f1(&mut c),
        "F2" => f2(&mut c, field),
        "F3" => f3(&mut c, field),
        "F4" => f4(&mut c, field),
        "F5" => f5(&mut c, field),
        "F6" => f6(&mut c, field),
        other => Err(FixtureError::Setup(format!("unknown fixture {other}"))),
    };
    if let Err(e) = outcome {
        c.push("computation", "completes", e.to_string(), false);
    }
    let field = if id == "F1" { "-".to_string() } else { field_name(field) };
    FixtureResult { id: id.to_string(), field, pass: c.0.iter().all(|x| x.pass), checks: c.0 }
}

/// Every fixture, F2 to F6 over both F_32003 and the rationals.
pub fn run_fixture_suite() -> SuiteReport {
    let mut report = SuiteReport::new("fixtures");
    for id in FIXTURES {
        report.fixtures.push(run_fixture(id, Field::DEFAULT));
        if *id != "F1" {
            report.fixtures.push(run_fixture(id, Field::Rational));
        }
    }
    report.instances = report.fixtures.len();
    report.finish()
}
