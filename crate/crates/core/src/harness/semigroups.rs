//! Exhaustive cross-checks over small numerical semigroups.

use rayon::prelude::*;
use serde::Serialize;

use crate::harness::{SuiteReport, Violation};
use crate::semigroup::{enumerate, NumericalSemigroup, SemigroupError};

pub const MAX_GENERATORS: usize = 4;
pub const MAX_VALUE: u64 = 40;

/// Counts of `(nearly Gorenstein and surjection)` against `self-dual`.
/// Recorded, not asserted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AgreementTable {
    pub both: usize,
    pub neither: usize,
    pub only_ng_and_surjection: usize,
    pub only_self_dual: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupFlags {
    pub generators: Vec<u64>,
    pub surjection: bool,
    pub nearly_gorenstein: bool,
    pub self_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupSummary {
    pub max_generators: usize,
    pub max_value: u64,
    pub semigroups: usize,
    pub routes_agree: usize,
    pub symmetric: usize,
    pub symmetric_nearly_gorenstein: usize,
    pub agreement: AgreementTable,
    /// Flags for a few named semigroups when they are in range.
    pub samples: Vec<SemigroupFlags>,
}

struct Row {
    flags: SemigroupFlags,
    via_pf: bool,
    via_colon: bool,
    symmetric: bool,
}

fn row(h: &NumericalSemigroup) -> Result<Row, SemigroupError> {
    let s = h.surjection_criterion()?;
    Ok(Row {
        flags: SemigroupFlags {
            generators: h.generators().to_vec(),
            surjection: s.verdict,
            nearly_gorenstein: h.is_nearly_gorenstein(),
            self_dual: h.is_self_dual(),
        },
        via_pf: s.via_pf,
        via_colon: s.via_colon,
        symmetric: h.is_symmetric(),
    })
}

const SAMPLES: &[&[u64]] = &[&[2, 3], &[3, 4, 5], &[4, 5, 6], &[9, 10, 61, 62]];

/// Every minimal generating tuple with at most `max_gen` entries, each at
/// most `max_val`: the two surjection routes must agree and symmetric
/// semigroups must be nearly Gorenstein.
pub fn enumerate_semigroups(max_gen: usize, max_val: u64) -> SuiteReport {
    let family = enumerate(max_gen, max_val);
    let rows: Vec<Result<Row, SemigroupError>> = family.par_iter().map(row).collect();
    let mut report = SuiteReport::new(format!("semigroups-{max_gen}-{max_val}"));
    report.instances = family.len();
    let mut summary = SemigroupSummary {
        max_generators: max_gen,
        max_value: max_val,
        semigroups: family.len(),
        routes_agree: 0,
        symmetric: 0,
        symmetric_nearly_gorenstein: 0,
        agreement: AgreementTable::default(),
        samples: Vec::new(),
    };
    for (i, (h, r)) in family.iter().zip(rows).enumerate() {
        let gens = format!("{:?}", h.generators());
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                report.violations.push(Violation { instance: i as u64, claim: "computes".into(), data: format!("{gens}: {e}") });
                continue;
            }
        };
        if r.via_pf == r.via_colon {
            summary.routes_agree += 1;
        } else {
            report.violations.push(Violation {
                instance: i as u64,
                claim: "surjection-routes-agree".into(),
                data: format!("{gens}: via pseudo-Frobenius {}, via colon {}", r.via_pf, r.via_colon),
            });
        }
        if r.symmetric {
            summary.symmetric += 1;
            if r.flags.nearly_gorenstein {
                summary.symmetric_nearly_gorenstein += 1;
            } else {
                report.violations.push(Violation {
                    instance: i as u64,
                    claim: "symmetric-is-nearly-gorenstein".into(),
                    data: gens.clone(),
                });
            }
        }
        let lhs = r.flags.nearly_gorenstein && r.flags.surjection;
        let t = &mut summary.agreement;
        match (lhs, r.flags.self_dual) {
            (true, true) => t.both += 1,
            (false, false) => t.neither += 1,
            (true, false) => t.only_ng_and_surjection += 1,
            (false, true) => t.only_self_dual += 1,
        }
        if SAMPLES.contains(&h.generators()) {
            summary.samples.push(r.flags);
        }
    }
    report.semigroups = Some(serde_json::to_value(&summary).expect("summary serializes"));
    report.finish()
}
