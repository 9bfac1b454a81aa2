//! Structured run reports. Every number is an exact integer; wall-clock
//! timings appear only when asked for, so reports stay byte-identical
//! across runs and can serve as regression fixtures.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cremona_core::ratmap::{Check, MapAnalysis};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// The statement being checked, in words.
    pub claim: String,
}

impl CheckRow {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>, claim: &str) -> Self {
        CheckRow {
            name: name.into(),
            passed,
            detail: detail.into(),
            claim: claim.into(),
        }
    }

    pub fn from_check(c: &Check, claim: &str) -> Self {
        Self::new(&c.name, c.passed, c.detail.clone(), claim)
    }
}

/// One analyzed map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub bidegree: [i64; 2],
    pub alpha: i64,
    pub beta: i64,
    pub eta: Option<i64>,
    pub genus: Option<i64>,
    pub genus_unclassified: Option<String>,
    pub deg_c1: i64,
    pub deg_c2: i64,
    pub birational: bool,
    pub dimension: Option<i64>,
    pub checks: Vec<CheckRow>,
    pub timing_ms: Option<u64>,
}

impl Row {
    pub fn from_analysis(a: &MapAnalysis) -> Self {
        Row {
            bidegree: [a.bidegree.0 as i64, a.bidegree.1],
            alpha: a.alpha,
            beta: a.beta,
            eta: a.eta,
            genus: a.genus,
            genus_unclassified: a.genus_unclassified.clone(),
            deg_c1: a.deg_c1,
            deg_c2: a.deg_c2,
            birational: a.birational,
            dimension: None,
            checks: a
                .checks
                .iter()
                .map(|c| CheckRow::from_check(c, analysis_claim(&c.name)))
                .collect(),
            timing_ms: None,
        }
    }
}

fn analysis_claim(name: &str) -> &'static str {
    match name {
        "codimension" => "the components have no common factor",
        "birational" => "a general fiber is one reduced point",
        "liaison" => "the preimage of a line links to the base curve in degree d^2",
        "jacobian" => "the jacobian has degree 4(d-1)",
        _ => "",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub field: String,
    pub seed: u64,
    pub tier: String,
    /// Keyed by family label.
    pub families: BTreeMap<String, Row>,
    pub dimensions: BTreeMap<String, i64>,
    pub sections: BTreeMap<String, Vec<CheckRow>>,
    pub errors: BTreeMap<String, String>,
}

impl Report {
    pub fn new(field: String, seed: u64, tier: &str) -> Self {
        Report {
            field,
            seed,
            tier: tier.into(),
            families: BTreeMap::new(),
            dimensions: BTreeMap::new(),
            sections: BTreeMap::new(),
            errors: BTreeMap::new(),
        }
    }

    /// `scope.check` for every failed check, plus every error.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (fam, row) in &self.families {
            for c in row.checks.iter().filter(|c| !c.passed) {
                out.push(format!("{fam}.{}: {}", c.name, c.detail));
            }
        }
        for (sec, rows) in &self.sections {
            for c in rows.iter().filter(|c| !c.passed) {
                out.push(format!("{sec}.{}: {}", c.name, c.detail));
            }
        }
        for (scope, e) in &self.errors {
            out.push(format!("{scope}.error: {e}"));
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}  seed {}  tier {}", self.field, self.seed, self.tier).unwrap();
        if !self.families.is_empty() {
            writeln!(out).unwrap();
            writeln!(
                out,
                "{:<7} {:>8} {:>5} {:>4} {:>4} {:>6} {:>5}",
                "family", "bidegree", "alpha", "beta", "eta", "genus", "dim"
            )
            .unwrap();
            let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
            for (fam, r) in &self.families {
                writeln!(
                    out,
                    "{:<7} {:>8} {:>5} {:>4} {:>4} {:>6} {:>5}",
                    fam,
                    format!("({},{})", r.bidegree[0], r.bidegree[1]),
                    r.alpha,
                    r.beta,
                    opt(r.eta),
                    opt(r.genus),
                    opt(r.dimension),
                )
                .unwrap();
            }
            for (fam, r) in &self.families {
                if let Some(why) = &r.genus_unclassified {
                    writeln!(out, "{fam}: genus unclassified ({why})").unwrap();
                }
                if let Some(ms) = r.timing_ms {
                    writeln!(out, "{fam}: {ms} ms").unwrap();
                }
            }
        }
        if !self.dimensions.is_empty() {
            writeln!(out).unwrap();
            let dims: Vec<String> = self.dimensions.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "dimensions {}", dims.join(" ")).unwrap();
        }
        for (sec, rows) in &self.sections {
            writeln!(out).unwrap();
            writeln!(out, "[{sec}]").unwrap();
            for c in rows {
                writeln!(
                    out,
                    "{} {:<28} {}",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
            }
        }
        let failures = self.failures();
        writeln!(out).unwrap();
        if failures.is_empty() {
            writeln!(out, "all checks passed").unwrap();
        } else {
            for f in failures {
                writeln!(out, "FAIL {f}").unwrap();
            }
        }
        out
    }
}
