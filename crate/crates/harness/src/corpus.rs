//! Built-in and on-disk corpora of rings and modules.

use std::path::Path;

use modlat_core::lattice::{all_submodules, greedy_generators};
use modlat_core::spec::{ModuleSpec, RingSpec};
use modlat_core::{FiniteModule, FiniteRing, Side};
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// Expected values checked on every run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Goldens {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hdim_left: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hdim_right: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobson: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub ring: RingSpec,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goldens: Option<Goldens>,
    #[serde(default)]
    pub tags: Vec<String>,
}

impl CorpusEntry {
    pub fn id(&self) -> String {
        self.ring.label()
    }
}

fn golden(hdim: usize, units: usize, jacobson: &[usize]) -> Option<Goldens> {
    Some(Goldens {
        hdim_left: Some(hdim),
        hdim_right: Some(hdim),
        units: Some(units),
        jacobson: Some(jacobson.to_vec()),
    })
}

pub const REGULAR_SUM_LIMIT: usize = 32;

/// Regular modules on both sides, every quotient of the left regular
/// module by a nonzero left ideal, and direct sums of two nonzero cyclic
/// quotients `R/I ⊕ R/J`. The regular module counts as `R/0` in sums of
/// order at most [`REGULAR_SUM_LIMIT`].
pub fn standard_modules(ring: &FiniteRing) -> Result<Vec<ModuleSpec>, HarnessError> {
    let left = FiniteModule::regular(ring, Side::Left);
    let lattice = all_submodules(&left)?;
    let mut specs = vec![ModuleSpec::regular(Side::Left), ModuleSpec::regular(Side::Right)];
    let mut nonzero = vec![ModuleSpec::regular(Side::Left)];
    for ideal in lattice.nodes().iter().skip(1) {
        let gens = greedy_generators(&left, ideal, ideal.iter()).expect("an ideal generates itself");
        let spec = ModuleSpec::quotient(ModuleSpec::regular(Side::Left), gens);
        if ideal.len() < ring.order() {
            nonzero.push(spec.clone());
        }
        specs.push(spec);
    }
    for (i, a) in nonzero.iter().enumerate() {
        for b in &nonzero[i..] {
            if i == 0 && ring.order() * b.build(ring)?.order() > REGULAR_SUM_LIMIT {
                continue;
            }
            specs.push(ModuleSpec::DirectSum {
                parts: vec![a.clone(), b.clone()],
            });
        }
    }
    Ok(specs)
}

pub fn builtin_corpus() -> Result<Vec<CorpusEntry>, HarnessError> {
    let c = RingSpec::cyclic;
    let rings: Vec<(RingSpec, Option<Goldens>, &[&str])> = vec![
        (c(1), golden(0, 1, &[0]), &["degenerate", "commutative"]),
        (c(2), golden(1, 1, &[0]), &["field", "commutative"]),
        (c(3), golden(1, 2, &[0]), &["field", "commutative"]),
        (c(4), golden(1, 2, &[0, 2]), &["local", "commutative"]),
        (c(6), golden(2, 2, &[0]), &["semisimple", "commutative"]),
        (c(8), golden(1, 4, &[0, 2, 4, 6]), &["local", "commutative"]),
        (c(9), golden(1, 6, &[0, 3, 6]), &["local", "commutative"]),
        (c(12), golden(2, 4, &[0, 6]), &["commutative"]),
        (RingSpec::matrix(c(2), 2), golden(2, 6, &[0]), &["noncommutative", "semisimple"]),
        (RingSpec::triangular(c(2), 2), golden(2, 2, &[0, 2]), &["noncommutative"]),
        (RingSpec::triangular(c(3), 2), golden(2, 12, &[0, 3, 6]), &["noncommutative"]),
        (
            RingSpec::Product {
                factors: vec![c(2), c(3)],
            },
            golden(2, 2, &[0]),
            &["semisimple", "commutative"],
        ),
    ];
    rings
        .into_iter()
        .map(|(ring, goldens, tags)| {
            let modules = standard_modules(&ring.build()?)?;
            Ok(CorpusEntry {
                ring,
                modules,
                goldens,
                tags: tags.iter().map(|t| t.to_string()).collect(),
            })
        })
        .collect()
}

/// A corpus entry that failed to load, kept so the run can report it.
#[derive(Debug)]
pub struct InputFailure {
    pub source: String,
    pub error: HarnessError,
}

pub type CorpusInput = Vec<Result<CorpusEntry, InputFailure>>;

/// Every `*.json` file in `dir` (sorted by name) holds one entry. An entry
/// with no modules gets the standard module family of its ring. Unreadable
/// or invalid files become failures in place rather than aborting.
pub fn load_corpus(dir: &Path) -> Result<CorpusInput, HarnessError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| HarnessError::Io(dir.display().to_string(), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths
        .iter()
        .map(|path| {
            let load = || -> Result<CorpusEntry, HarnessError> {
                let mut entry: CorpusEntry = crate::read_json(path)?;
                if entry.modules.is_empty() {
                    entry.modules = standard_modules(&entry.ring.build()?)?;
                }
                Ok(entry)
            };
            load().map_err(|error| InputFailure {
                source: path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned()),
                error,
            })
        })
        .collect())
}
