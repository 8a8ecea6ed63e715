use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use gradmod::exactla::Field;
use gradmod::gmod::{is_burch, is_m_full_with, is_weakly_m_full, Certificate, Module, Verdict};
use gradmod::harness::{enumerate_semigroups, run_fixture, run_fixture_suite, run_property_suite, run_self_test, SuiteReport, FIXTURES};
use gradmod::instance::{parse_instance, parse_poly, Instance};
use gradmod::resolve::{ext_dims, suggest_window, tor_dims, Resolution};
use gradmod::semigroup::NumericalSemigroup;

use crate::render;
use crate::{CheckArgs, Command, EnumerateCommand, HomologyArgs, ResolveArgs, SemigroupArgs, VerifyCommand};

/// Version tag of every JSON report; see `docs/report.schema.json`.
pub const SCHEMA: &str = "gradmod-report/1";

pub struct Output {
    pub command: &'static str,
    pub code: u8,
    pub human: String,
    pub result: Value,
}

impl Output {
    pub fn envelope(&self) -> Value {
        json!({ "schema": SCHEMA, "command": self.command, "code": self.code, "result": self.result })
    }
}

pub fn dispatch(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Semigroup(a) => semigroup(a),
        Command::Check(a) => check(a),
        Command::Resolve(a) => resolve(a),
        Command::Tor(a) => homology(a, false),
        Command::Ext(a) => homology(a, true),
        Command::Verify { suite } => verify(suite),
        Command::Enumerate { family: EnumerateCommand::Semigroups { max_gen, max_val } } => {
            if *max_gen > 4 || *max_val > 40 {
                bail!("enumeration is limited to --max-gen <= 4 and --max-val <= 40");
            }
            Ok(suite_output("enumerate", enumerate_semigroups(*max_gen, *max_val)))
        }
    }
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse_instance(&text).with_context(|| format!("{}", path.display()))?;
    file.build().with_context(|| format!("{}", path.display()))
}

fn module<'a>(inst: &'a Instance, name: &str) -> Result<&'a Module> {
    inst.module(name).ok_or_else(|| anyhow!("unknown module {name}"))
}

fn semigroup(a: &SemigroupArgs) -> Result<Output> {
    let h = NumericalSemigroup::parse(&a.gens)?;
    let everything = a.all || !(a.pf || a.apery.is_some() || a.surjection || a.nearly_gorenstein || a.self_dual || a.profile);
    let mut result = serde_json::Map::new();
    let mut human = String::new();
    result.insert("generators".into(), json!(h.generators()));
    result.insert("frobenius".into(), json!(h.frobenius()));
    human += &format!("H = <{}>, Frobenius number {}\n", join(h.generators()), h.frobenius());
    if everything || a.pf {
        let pf = h.pseudo_frobenius();
        human += &format!("PF(H) = {{{}}}, type {}\n", join(&pf), pf.len());
        result.insert("pseudo_frobenius".into(), json!(pf));
    }
    if let Some(m) = a.apery {
        let ap = h.apery(m)?;
        human += &format!("Ap(H, {m}) = {{{}}}\n", join(&ap));
        result.insert("apery".into(), json!({ "element": m, "set": ap }));
    }
    if everything || a.profile {
        let p = h.profile();
        human += &format!(
            "multiplicity {}, embedding dimension {}, minimal multiplicity {}, symmetric {}\n",
            p.multiplicity, p.embedding_dimension, p.minimal_multiplicity, p.symmetric
        );
        result.insert("profile".into(), serde_json::to_value(p)?);
    }
    if everything || a.surjection {
        let s = h.surjection_criterion()?;
        human += &format!("surjection criterion {} (pseudo-Frobenius route {}, colon route {})\n", s.verdict, s.via_pf, s.via_colon);
        result.insert("surjection".into(), serde_json::to_value(s)?);
    }
    if everything || a.nearly_gorenstein {
        let ng = h.is_nearly_gorenstein();
        human += &format!("nearly Gorenstein {ng}\n");
        result.insert("nearly_gorenstein".into(), json!(ng));
    }
    if everything || a.self_dual {
        let sd = h.is_self_dual();
        human += &format!("m isomorphic to its canonical dual {sd}\n");
        result.insert("self_dual".into(), json!(sd));
    }
    Ok(Output { command: "semigroup", code: 0, human, result: Value::Object(result) })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn check(a: &CheckArgs) -> Result<Output> {
    let inst = load(&a.file)?;
    let x = module(&inst, &a.ambient)?;
    let spec = inst.submodules.get(&a.submodule).ok_or_else(|| anyhow!("unknown submodule {}", a.submodule))?;
    if spec.ambient != a.ambient {
        bail!("submodule {} lives in {}, not {}", a.submodule, spec.ambient, a.ambient);
    }
    let element = match &a.m_full_with {
        Some(e) => Some(match inst.elements.get(e) {
            Some(v) => v.clone(),
            None => parse_poly(&inst.ring, e).with_context(|| format!("element {e}"))?,
        }),
        None => None,
    };
    let what = if a.weakly_m_full {
        "weakly m-full"
    } else if element.is_some() {
        "m-full"
    } else {
        "Burch"
    };
    let test = |d: i64| -> Result<Certificate> {
        let n = inst.window(&a.submodule, d).expect("checked above");
        Ok(match &element {
            _ if a.weakly_m_full => is_weakly_m_full(&n, d)?,
            Some(e) => is_m_full_with(&n, e, d)?,
            None => is_burch(&n, d)?,
        })
    };
    let cert = match a.window {
        Some(d) => test(d)?,
        None => {
            let top = inst.generator_top(&a.submodule).unwrap_or(0).max(x.max_generator_degree().unwrap_or(0));
            let first = test(top + 2)?;
            match first.needed_window {
                Some(n) if !first.verdict.is_exact() && n > first.window => test(n)?,
                _ => first,
            }
        }
    };
    let code = if cert.verdict == Verdict::Holds { 0 } else { 1 };
    let label = format!("{} in {}: {what}", a.submodule, a.ambient);
    Ok(Output {
        command: "check",
        code,
        human: render::certificate(&label, &cert),
        result: json!({ "submodule": a.submodule, "ambient": a.ambient, "test": what, "certificate": cert }),
    })
}

fn resolve(a: &ResolveArgs) -> Result<Output> {
    let inst = load(&a.file)?;
    let m = module(&inst, &a.module)?;
    let res = Resolution::compute(m, a.length, a.window)?;
    let table = res.betti_table();
    let human = format!("minimal resolution of {}, window D = {}\n{}", a.module, a.window, render::betti(&table));
    let result = json!({
        "module": a.module,
        "window": a.window,
        "complex": res.check_complex(),
        "minimal": res.check_minimal(),
        "betti": table,
    });
    Ok(Output { command: "resolve", code: 0, human, result })
}

fn homology(a: &HomologyArgs, ext: bool) -> Result<Output> {
    let inst = load(&a.file)?;
    let (m, n) = (module(&inst, &a.first)?, module(&inst, &a.second)?);
    let auto = a.window.is_none();
    let window = match a.window {
        Some(d) => d,
        None => suggest_window(m, n, a.imax).context("no certified window; pass -D to compute in a fixed window")?,
    };
    let report = if ext { ext_dims(m, n, a.imax, window)? } else { tor_dims(m, n, a.imax, window)? };
    let name = if ext { "Ext" } else { "Tor" };
    let title = format!("{name}_i({}, {})", a.first, a.second);
    Ok(Output {
        command: if ext { "ext" } else { "tor" },
        code: 0,
        human: render::homology(&title, &report),
        result: json!({ "functor": name, "first": a.first, "second": a.second, "auto_window": auto, "report": report }),
    })
}

fn suite_output(command: &'static str, r: SuiteReport) -> Output {
    Output { command, code: if r.passed { 0 } else { 1 }, human: render::suite(&r), result: serde_json::to_value(&r).expect("reports serialize") }
}

fn verify(v: &VerifyCommand) -> Result<Output> {
    match v {
        VerifyCommand::Paper { fixture: None } => Ok(suite_output("verify", run_fixture_suite())),
        VerifyCommand::Paper { fixture: Some(id) } => {
            let id = id.to_uppercase();
            if !FIXTURES.contains(&id.as_str()) {
                bail!("unknown fixture {id}; expected one of {}", FIXTURES.join(", "));
            }
            let mut r = SuiteReport::new(format!("fixture-{id}"));
            r.fixtures.push(run_fixture(&id, Field::DEFAULT));
            if id != "F1" {
                r.fixtures.push(run_fixture(&id, Field::Rational));
            }
            r.instances = r.fixtures.len();
            r.passed = r.fixtures.iter().all(|f| f.pass);
            Ok(suite_output("verify", r))
        }
        VerifyCommand::Random { seed, count, self_test: false } => {
            if *count == 0 {
                bail!("--count must be at least 1");
            }
            Ok(suite_output("verify", run_property_suite(*seed, *count)))
        }
        VerifyCommand::Random { seed, self_test: true, .. } => {
            let r = run_self_test(*seed);
            let caught = !r.violations.is_empty();
            let mut out = suite_output("verify", r);
            out.code = if caught { 0 } else { 1 };
            out.human += if caught { "self-test: planted breach detected\n" } else { "self-test: planted breach missed\n" };
            Ok(out)
        }
    }
}
