//! Regression fixtures and seeded property suites.

pub mod fixtures;
pub mod generate;
pub mod properties;
pub mod semigroups;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use generate::{generate_instance, AmbientKind, Built, InstanceSpec, SUITE_IMAX};
pub use fixtures::{run_fixture, run_fixture_suite, FIXTURES};
pub use properties::{evaluate, evaluate_with, Outcome, PROPERTIES};
pub use semigroups::enumerate_semigroups;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: u64,
    pub claim: String,
    pub data: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyStats {
    pub claim: String,
    pub statement: String,
    pub checked: usize,
    pub vacuous: usize,
    pub skipped: usize,
    /// `skipped / (checked + skipped)`, zero when the property never applied.
    pub skip_rate: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub id: String,
    pub field: String,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub properties: Vec<PropertyStats>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fixtures: Vec<FixtureResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroups: Option<serde_json::Value>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> SuiteReport {
        SuiteReport {
            suite: suite.into(),
            instances: 0,
            violations: Vec::new(),
            properties: Vec::new(),
            fixtures: Vec::new(),
            semigroups: None,
            passed: true,
        }
    }

    pub(crate) fn finish(mut self) -> SuiteReport {
        self.violations.sort_by(|a, b| (a.instance, &a.claim).cmp(&(b.instance, &b.claim)));
        self.passed = self.violations.is_empty() && self.fixtures.iter().all(|f| f.pass);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Instance seeds of a suite run; the first is `seed` itself so single
/// instances can be replayed with `count = 1`.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![seed];
    while out.len() < count {
        out.push(rng.gen());
    }
    out.truncate(count);
    out
}

/// Aggregates per-instance outcomes into a report.
pub fn assemble(suite: &str, results: Vec<(u64, Vec<(&'static str, Outcome)>)>) -> SuiteReport {
    let mut report = SuiteReport::new(suite);
    report.instances = results.len();
    report.properties = PROPERTIES
        .iter()
        .map(|(id, statement)| PropertyStats {
            claim: id.to_string(),
            statement: statement.to_string(),
            checked: 0,
            vacuous: 0,
            skipped: 0,
            skip_rate: 0.0,
        })
        .collect();
    for (instance, outcomes) in results {
        for (claim, outcome) in outcomes {
            let stats = report.properties.iter_mut().find(|p| p.claim == claim).expect("known claim");
            match outcome {
                Outcome::Checked => stats.checked += 1,
                Outcome::Vacuous => stats.vacuous += 1,
                Outcome::Skipped(_) => stats.skipped += 1,
                Outcome::Violation(data) => {
                    stats.checked += 1;
                    report.violations.push(Violation { instance, claim: claim.to_string(), data });
                }
            }
        }
    }
    for p in &mut report.properties {
        let applied = p.checked + p.skipped;
        p.skip_rate = if applied == 0 { 0.0 } else { p.skipped as f64 / applied as f64 };
    }
    report.finish()
}

/// Evaluates every property on `count` generated instances. The result does
/// not depend on thread scheduling.
pub fn run_property_suite(seed: u64, count: usize) -> SuiteReport {
    let seeds = instance_seeds(seed, count.max(1));
    let results: Vec<(u64, Vec<(&'static str, Outcome)>)> =
        seeds.par_iter().map(|&s| (s, evaluate(&generate_instance(s)))).collect();
    assemble(&format!("random-{seed}-{count}"), results)
}

/// Mutation check: the instance for `seed` with `∂_1` widened by identity
/// columns `F_0 → F_0`, so the resolution is neither minimal nor a complex
/// over `M`. A working suite reports both breaches as violations.
pub fn run_self_test(seed: u64) -> SuiteReport {
    use crate::gmod::free::ModuleMap;
    use crate::resolve::Resolution;

    let spec = generate_instance(seed);
    let b = spec.build();
    let mut res = Resolution::compute(&b.m, spec.imax + 1, spec.window).expect("window covers the generators");
    let d1 = res.differential(1).clone();
    let f0 = res.free_module(0).clone();
    let mut cols = d1.column_coords().to_vec();
    cols.extend((0..f0.rank()).map(|j| f0.generator(j)));
    let planted = ModuleMap::from_coords(d1.source().direct_sum(&f0), f0, cols);
    res.replace_differential(1, planted);
    let outcomes = properties::structural(&res);
    let mut report = assemble(&format!("self-test-{seed}"), vec![(seed, outcomes)]);
    report.properties.retain(|p| p.checked + p.skipped > 0);
    report
}
