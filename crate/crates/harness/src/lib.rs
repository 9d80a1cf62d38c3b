//! Keystroke replay over test manifests, outcome reports, and the NDJSON
//! session protocol used by editors.

pub mod manifest;
pub mod protocol;
pub mod replay;
pub mod report;
pub mod serve;

use std::path::PathBuf;

use thiserror::Error;

pub use manifest::{load_manifest, Compositions, TestCase};
pub use replay::{classify, run_test, Category, Outcome};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error(transparent)]
    Grammar(#[from] autobox_core::grammar::GrammarError),
    #[error("unknown composition `{0}`")]
    UnknownComposition(String),
    #[error("test {index}: {reason}")]
    BadTest { index: usize, reason: String },
    #[error("no outcomes to report")]
    NoOutcomes,
}

pub(crate) fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> HarnessError {
    let path = path.into();
    move |source| HarnessError::Io { path, source }
}
