//! JSON run report with a timing-independent determinism hash.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::eval::{Config, Outcome};

pub const SCHEMA: &str = "charp-report/1";

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ConfigEcho {
    pub emax: u32,
    pub window: usize,
    pub order: String,
    pub seed: u64,
    pub parallel: bool,
}

impl From<&Config> for ConfigEcho {
    fn from(c: &Config) -> Self {
        ConfigEcho {
            emax: c.emax,
            window: c.window,
            order: format!("{:?}", c.order).to_lowercase(),
            seed: c.seed,
            parallel: c.parallel,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Entry {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    pub check: String,
    pub directive: String,
    pub ring: String,
    pub status: String,
    pub expected: Option<String>,
    pub matched: Option<bool>,
    pub value: Option<Value>,
    pub certificate: Option<Value>,
    pub verified: Option<bool>,
    pub narrative: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Entry {
    pub fn new(index: usize, check: &crate::ast::Check, outcome: Outcome, timing_ms: f64) -> Entry {
        use crate::ast::Expect;
        let expected = check.expect.as_ref().map(|e| match e {
            Expect::Status(s) => s.clone(),
            Expect::Value(v) => v.to_string(),
        });
        let matched = check.expect.as_ref().map(|e| match e {
            Expect::Status(s) => *s == outcome.status,
            Expect::Value(v) => outcome.status == "PASS" && outcome.value.as_ref().and_then(Value::as_i64) == Some(*v),
        });
        Entry {
            index,
            scenario: None,
            check: check.name.clone(),
            directive: check.to_string(),
            ring: check.ring.clone(),
            status: outcome.status,
            expected,
            matched,
            value: outcome.value,
            certificate: outcome.certificate,
            verified: outcome.verified,
            narrative: outcome.narrative,
            timing_ms: Some(timing_ms),
        }
    }

    /// Unexpected outcome: an explicit mismatch, or an ERROR nobody asked for.
    pub fn is_failure(&self) -> bool {
        self.matched == Some(false) || (self.matched.is_none() && self.status == "ERROR")
    }

    fn unexpected_resource_limit(&self) -> bool {
        self.status == "RESOURCE_LIMIT" && self.matched != Some(true)
    }
}

#[derive(Debug, Clone, Default, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub unchecked: usize,
    pub errors: usize,
    pub resource_limits: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: ConfigEcho,
    pub assumptions: Vec<String>,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    pub determinism_hash: String,
}

pub fn assumptions() -> Vec<String> {
    vec![
        "Rings are graded models: a local ring is represented by its associated graded ring or a standard graded presentation.".into(),
        "Frobenius and tight closure verdicts are semi-decisions bounded by emax; UNKNOWN means no certificate was found.".into(),
        "Stability of closure chains is a window heuristic, not a proof.".into(),
    ]
}

impl Report {
    pub fn new(config: &Config, entries: Vec<Entry>) -> Report {
        let mut summary = Summary { total: entries.len(), ..Summary::default() };
        for e in &entries {
            match e.matched {
                Some(true) => summary.matched += 1,
                Some(false) => summary.mismatched += 1,
                None => summary.unchecked += 1,
            }
            summary.errors += usize::from(e.status == "ERROR");
            summary.resource_limits += usize::from(e.status == "RESOURCE_LIMIT");
        }
        let mut r = Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            config: config.into(),
            assumptions: assumptions(),
            entries,
            summary,
            determinism_hash: String::new(),
        };
        r.determinism_hash = r.compute_hash();
        r
    }

    /// sha256 of the report with timings and the hash itself removed.
    pub fn compute_hash(&self) -> String {
        let mut copy = self.clone();
        copy.determinism_hash.clear();
        for e in &mut copy.entries {
            e.timing_ms = None;
        }
        let text = serde_json::to_string(&copy).expect("report serializes");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// 0 all as expected, 1 mismatch, 3 unexpected resource limit.
    pub fn exit_code(&self) -> i32 {
        if self.entries.iter().any(Entry::unexpected_resource_limit) {
            3
        } else if self.entries.iter().any(Entry::is_failure) {
            1
        } else {
            0
        }
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let mark = match e.matched {
                    Some(true) => "ok",
                    Some(false) => "MISMATCH",
                    None => "-",
                };
                let scen = e.scenario.as_deref().map(|s| format!("[{s}] ")).unwrap_or_default();
                let exp = e.expected.as_deref().map(|x| format!(" (expected {x})")).unwrap_or_default();
                format!("{scen}#{} {} => {}{exp} {mark}", e.index, e.directive, e.status)
            })
            .collect();
        let s = &self.summary;
        out.push(format!(
            "{} checks: {} matched, {} mismatched, {} unchecked, {} errors, {} resource limits; hash {}",
            s.total, s.matched, s.mismatched, s.unchecked, s.errors, s.resource_limits, self.determinism_hash
        ));
        out
    }
}
