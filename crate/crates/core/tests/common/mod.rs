#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use autobox_core::grammar::Composition;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn comp(id: &str) -> Arc<Composition> {
    let path = fixtures().join("languages").join(format!("{id}.composition"));
    Arc::new(Composition::load(&path).unwrap_or_else(|e| panic!("{id}: {e}")))
}
