//! Corpus, theorem registry and verification runner behind the `modlat`
//! command line tool.

use std::path::Path;

pub mod corpus;
pub mod report;
pub mod runner;
pub mod theorems;

pub use corpus::{builtin_corpus, load_corpus, CorpusEntry};
pub use report::{Status, VerificationReport};
pub use runner::{run_verification, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] modlat_core::Error),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(path.display().to_string(), e))?;
    parse_json(&path.display().to_string(), &text)
}

pub fn parse_json<T: serde::de::DeserializeOwned>(origin: &str, text: &str) -> Result<T, HarnessError> {
    serde_json::from_str(text).map_err(|e| HarnessError::Json {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
