//! Machine-readable verification reports.
//!
//! JSON reports are deterministic: given the same fixtures, seed, and
//! budget, two runs serialize byte-identically. Wall-clock timings are
//! therefore reported only in the human text rendering, never in JSON.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

/// A replayable failing instance: `inputs` holds fully serialized
/// domain objects (the file-format documents), so feeding them back
/// through the parser reproduces the verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub description: String,
    pub inputs: serde_json::Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub fixture: String,
    pub backend: String,
    pub status: Status,
    pub instances: usize,
    pub oracle_crosschecks: usize,
    pub warnings: Vec<String>,
    pub failures: Vec<Counterexample>,
    #[serde(skip)]
    pub wall_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub budget: usize,
    pub results: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn assemble(seed: u64, budget: usize, mut results: Vec<CheckResult>) -> Report {
        results.sort_by(|a, b| {
            (id_rank(&a.id), &a.fixture, &a.backend).cmp(&(id_rank(&b.id), &b.fixture, &b.backend))
        });
        let overall = if results.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            schema: 1,
            seed,
            budget,
            results,
            overall,
        }
    }

    /// 0 when everything passed or was inapplicable, 1 on check failure.
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inapplicable => "SKIP",
            };
            let _ = writeln!(
                out,
                "{status} {id:7} fixture={fixture} backend={backend} instances={n} oracle-crosschecks={x} ({ms} ms)",
                id = r.id,
                fixture = r.fixture,
                backend = r.backend,
                n = r.instances,
                x = r.oracle_crosschecks,
                ms = r.wall_ms,
            );
            for w in &r.warnings {
                let _ = writeln!(out, "       warning: {w}");
            }
            for f in &r.failures {
                let _ = writeln!(out, "       counterexample: {}", f.description);
            }
        }
        let _ = writeln!(
            out,
            "overall: {}",
            match self.overall {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Inapplicable => "inapplicable",
            }
        );
        out
    }
}

/// Registry order of the check identifiers.
pub const CHECK_IDS: &[&str] = &[
    "L1", "L2", "L3", "L4", "T1", "C1", "C2", "C3", "EXAMPLE", "P1", "R1", "L5", "T2",
];

fn id_rank(id: &str) -> usize {
    CHECK_IDS.iter().position(|&x| x == id).unwrap_or(usize::MAX)
}
