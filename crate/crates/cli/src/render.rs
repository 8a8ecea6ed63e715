use std::fmt::Write;

use gradmod::gmod::Certificate;
use gradmod::harness::SuiteReport;
use gradmod::resolve::{BettiTable, HomologyReport};

pub fn homology(title: &str, r: &HomologyReport) -> String {
    let mut s = format!("{title}, window D = {}\n", r.window);
    for row in &r.rows {
        let v = match row.vanishes() {
            Some(true) => "zero",
            Some(false) => "nonzero",
            None => "uncertified",
        };
        let entries: Vec<String> = row
            .entries
            .iter()
            .filter(|(_, x)| *x != Some(0))
            .map(|(d, x)| match x {
                Some(x) => format!("{d}:{x}"),
                None => format!("{d}:?"),
            })
            .collect();
        let tail = if row.full { "" } else { "  (more degrees not computed)" };
        let line = format!("  i={}  {v:<11} {}{tail}", row.i, entries.join(" "));
        writeln!(s, "{}", line.trim_end()).unwrap();
    }
    s
}

pub fn betti(t: &BettiTable) -> String {
    let mut s = String::from("i  total  degree:count\n");
    for row in &t.rows {
        let entries: Vec<String> = row.entries.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        let note = if row.complete { String::new() } else { format!("  (complete through degree {})", row.complete_through) };
        writeln!(s, "{:<2} {:<6} {}{note}", row.i, t.total(row.i), entries.join(" ")).unwrap();
    }
    s
}

pub fn certificate(what: &str, c: &Certificate) -> String {
    let mut s = format!("{what}: {} (window D = {})\n", c.verdict.as_str(), c.window);
    if let Some(w) = &c.witness {
        writeln!(s, "  witness: {} in degree {}", w.element, w.degree).unwrap();
    }
    if !c.verdict.is_exact() {
        match c.needed_window {
            Some(n) => writeln!(s, "  exact from D = {n}").unwrap(),
            None => writeln!(s, "  no certifying window known").unwrap(),
        }
    }
    s
}

pub fn suite(r: &SuiteReport) -> String {
    let mut s = format!("suite {}: {} instances\n", r.suite, r.instances);
    for f in &r.fixtures {
        writeln!(s, "{} [{}] {}", f.id, f.field, if f.pass { "PASS" } else { "FAIL" }).unwrap();
        for c in &f.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(s, "  {mark} {}: expected {}, computed {}", c.claim, c.expected, c.computed).unwrap();
        }
    }
    if !r.properties.is_empty() {
        writeln!(s, "{:<32} {:>7} {:>7} {:>7} {:>9}", "property", "checked", "vacuous", "skipped", "skip rate").unwrap();
        for p in &r.properties {
            writeln!(s, "{:<32} {:>7} {:>7} {:>7} {:>8.1}%", p.claim, p.checked, p.vacuous, p.skipped, 100.0 * p.skip_rate)
                .unwrap();
        }
    }
    if let Some(sg) = &r.semigroups {
        writeln!(
            s,
            "semigroups: {}, routes agree: {}, symmetric: {} (nearly Gorenstein: {})",
            sg["semigroups"], sg["routes_agree"], sg["symmetric"], sg["symmetric_nearly_gorenstein"]
        )
        .unwrap();
        let a = &sg["agreement"];
        writeln!(
            s,
            "NG and surjection vs self-dual: both {}, neither {}, only NG+surjection {}, only self-dual {}",
            a["both"], a["neither"], a["only_ng_and_surjection"], a["only_self_dual"]
        )
        .unwrap();
    }
    for v in &r.violations {
        writeln!(s, "VIOLATION instance {} {}: {}", v.instance, v.claim, v.data).unwrap();
    }
    writeln!(s, "{}", if r.passed { "PASS" } else { "FAIL" }).unwrap();
    s
}
