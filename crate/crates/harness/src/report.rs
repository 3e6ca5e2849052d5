//! The verification report and its JSON form.

use std::collections::BTreeMap;

use modlat_core::Caps;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultRow {
    pub theorem: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witness_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    #[serde(flatten)]
    pub counts: Counts,
    pub by_theorem: BTreeMap<String, Counts>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub corpus: String,
    pub theorems: Vec<String>,
    pub caps: Caps,
    pub coindependence: String,
    pub end_budget: usize,
    pub witnesses: bool,
}

/// Wall-clock data, kept apart from the deterministic body.
#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub jobs: usize,
    pub total_ms: f64,
    /// Parallel to `results`.
    pub wall_ms: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub results: Vec<ResultRow>,
    pub timings: Timings,
}

#[derive(Serialize)]
struct Body<'a> {
    schema_version: u32,
    tool_version: &'a str,
    config: &'a ConfigEcho,
    summary: &'a Summary,
    results: &'a [ResultRow],
}

pub fn digest(witness: &Value) -> String {
    let bytes = Sha256::digest(witness.to_string().as_bytes());
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl VerificationReport {
    pub fn new(config: ConfigEcho, results: Vec<ResultRow>, timings: Timings) -> Self {
        let mut counts = Counts::default();
        let mut by_theorem: BTreeMap<String, Counts> = BTreeMap::new();
        for row in &results {
            counts.add(row.status);
            by_theorem.entry(row.theorem.clone()).or_default().add(row.status);
        }
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: Summary { counts, by_theorem },
            results,
            timings,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.counts.fail == 0
    }

    /// The report without timings: identical across job counts and runs.
    pub fn body(&self) -> String {
        let body = Body {
            schema_version: self.schema_version,
            tool_version: &self.tool_version,
            config: &self.config,
            summary: &self.summary,
            results: &self.results,
        };
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn rows<'a>(&'a self, theorem: &'a str) -> impl Iterator<Item = &'a ResultRow> + 'a {
        self.results.iter().filter(move |r| r.theorem == theorem)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (id, c) in &self.summary.by_theorem {
            out.push_str(&format!("{id:<16} pass {:>4}  fail {:>3}  skipped {:>4}\n", c.pass, c.fail, c.skipped));
        }
        for row in self.results.iter().filter(|r| r.status == Status::Fail) {
            out.push_str(&format!(
                "FAIL {} {}: {}\n",
                row.theorem,
                row.instance,
                row.reason.as_deref().unwrap_or("")
            ));
        }
        let c = &self.summary.counts;
        out.push_str(&format!(
            "total {}: {} pass, {} fail, {} skipped in {:.0} ms\n",
            c.total(),
            c.pass,
            c.fail,
            c.skipped,
            self.timings.total_ms
        ));
        out
    }
}
