//! Builds instances from a corpus and runs the selected verifiers over them
//! in parallel, assembling results in a fixed order.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use modlat_core::lattice::CoindependenceMode;
use modlat_core::spec::ModuleSpec;
use modlat_core::{Caps, Error};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corpus::{CorpusEntry, InputFailure};
use crate::report::{digest, ConfigEcho, ResultRow, Status, Timings, VerificationReport};
use crate::theorems::{canonical_id, Case, CheckConfig, ModuleCase, RingCase, Scope, Verdict, END_BUDGET, THEOREMS};
use crate::HarnessError;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus: String,
    pub theorems: Vec<&'static str>,
    pub jobs: usize,
    pub check: CheckConfig,
    /// Embed full witnesses in the report, not just their digests.
    pub witnesses: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus: "builtin".into(),
            theorems: THEOREMS.iter().map(|t| t.id).collect(),
            jobs: 1,
            check: CheckConfig::default(),
            witnesses: false,
        }
    }
}

/// Parses a comma-separated list of theorem ids, or `all`. The result is
/// in registry order without duplicates.
pub fn parse_filter(text: &str) -> Result<Vec<&'static str>, HarnessError> {
    let mut wanted = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            return Ok(THEOREMS.iter().map(|t| t.id).collect());
        }
        wanted.push(canonical_id(part).ok_or_else(|| HarnessError::UnknownTheorem(part.to_string()))?);
    }
    Ok(THEOREMS.iter().map(|t| t.id).filter(|id| wanted.contains(id)).collect())
}

fn input_row(instance: String, error: &dyn std::fmt::Display) -> ResultRow {
    let witness = json!({ "error": error.to_string() });
    ResultRow {
        theorem: "input".into(),
        instance,
        status: Status::Fail,
        reason: Some(error.to_string()),
        witness_digest: digest(&witness),
        witness: None,
    }
}

fn build_module(ring: &modlat_core::FiniteRing, spec: &ModuleSpec) -> Result<ModuleCase, Error> {
    let module = spec.build(ring)?;
    let parts = match spec {
        ModuleSpec::DirectSum { parts } => parts.iter().map(|p| p.build(ring)).collect::<Result<_, _>>()?,
        _ => Vec::new(),
    };
    Ok(ModuleCase {
        id: spec.label(),
        spec: spec.clone(),
        module,
        parts,
    })
}

/// Builds ring and module instances; anything that fails to build becomes
/// an `input` failure row instead.
pub fn prepare(corpus: &[Result<CorpusEntry, InputFailure>]) -> (Vec<RingCase>, Vec<ResultRow>) {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for item in corpus {
        let entry = match item {
            Ok(entry) => entry,
            Err(f) => {
                failures.push(input_row(f.source.clone(), &f.error));
                continue;
            }
        };
        let ring = match entry.ring.build() {
            Ok(ring) => ring,
            Err(e) => {
                failures.push(input_row(entry.id(), &e));
                continue;
            }
        };
        let mut modules = Vec::new();
        for spec in &entry.modules {
            match build_module(&ring, spec) {
                Ok(m) => modules.push(m),
                Err(e) => failures.push(input_row(format!("{}/{}", entry.id(), spec.label()), &e)),
            }
        }
        cases.push(RingCase {
            id: entry.id(),
            ring,
            goldens: entry.goldens.clone(),
            tags: entry.tags.clone(),
            modules,
        });
    }
    (cases, failures)
}

fn evaluate(theorem: &crate::theorems::Theorem, case: &Case<'_>, config: &RunConfig) -> (Status, Option<String>, Value) {
    let outcome = catch_unwind(AssertUnwindSafe(|| theorem.run(case, &config.check)));
    match outcome {
        Ok(Ok(o)) => match o.verdict {
            Verdict::Pass => (Status::Pass, None, o.witness),
            Verdict::Fail(reason) => (Status::Fail, Some(reason), o.witness),
            Verdict::Skipped(reason) => (Status::Skipped, Some(reason), o.witness),
        },
        Ok(Err(e @ Error::CapExceeded { .. })) => (Status::Skipped, Some(e.to_string()), Value::Null),
        Ok(Err(e)) => (Status::Fail, Some(e.to_string()), Value::Null),
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "verifier panicked".into());
            (Status::Fail, Some(format!("panic: {message}")), Value::Null)
        }
    }
}

pub fn run_verification(corpus: &[Result<CorpusEntry, InputFailure>], config: &RunConfig) -> VerificationReport {
    let start = Instant::now();
    let (cases, mut rows) = prepare(corpus);
    let mut wall = vec![0.0; rows.len()];

    let mut tasks: Vec<(&crate::theorems::Theorem, Case<'_>, String)> = Vec::new();
    for theorem in THEOREMS.iter().filter(|t| config.theorems.contains(&t.id)) {
        for rc in &cases {
            match theorem.scope {
                Scope::Ring => tasks.push((theorem, Case::Ring(rc), rc.id.clone())),
                Scope::Module => {
                    for mc in &rc.modules {
                        tasks.push((theorem, Case::Module(rc, mc), format!("{}/{}", rc.id, mc.id)));
                    }
                }
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool builds");
    let results: Vec<(ResultRow, f64)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(theorem, case, instance)| {
                let t = Instant::now();
                let (status, reason, witness) = evaluate(theorem, case, config);
                let row = ResultRow {
                    theorem: theorem.id.to_string(),
                    instance: instance.clone(),
                    status,
                    reason,
                    witness_digest: digest(&witness),
                    witness: config.witnesses.then_some(witness),
                };
                (row, t.elapsed().as_secs_f64() * 1e3)
            })
            .collect()
    });
    for (row, ms) in results {
        rows.push(row);
        wall.push(ms);
    }

    let echo = ConfigEcho {
        corpus: config.corpus.clone(),
        theorems: config.theorems.iter().map(|s| s.to_string()).collect(),
        caps: Caps::current(),
        coindependence: match config.check.coindependence {
            CoindependenceMode::Binding => "binding".into(),
            CoindependenceMode::Exhaustive => "exhaustive".into(),
        },
        end_budget: END_BUDGET,
        witnesses: config.witnesses,
    };
    let timings = Timings {
        jobs: config.jobs.max(1),
        total_ms: start.elapsed().as_secs_f64() * 1e3,
        wall_ms: wall,
    };
    VerificationReport::new(echo, rows, timings)
}
