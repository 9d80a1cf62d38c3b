use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use autobox_core::grammar::Composition;
use serde::{Deserialize, Serialize};

use crate::replay::Category;
use crate::{io_err, HarnessError};

/// One replay: load `base_file`, delete `span` characters at `offset`,
/// then type `fragment` a character at a time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestCase {
    pub base_file: PathBuf,
    pub offset: usize,
    pub span: usize,
    pub fragment: String,
    pub composition: String,
    /// Frozen category under the `all` heuristic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Category>,
}

/// Reads a manifest; relative base files are resolved against its
/// directory.
pub fn load_manifest(path: &Path) -> Result<Vec<TestCase>, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut tests: Vec<TestCase> =
        serde_json::from_str(&text).map_err(|source| HarnessError::Json { path: path.into(), source })?;
    let dir = path.parent().unwrap_or(Path::new(""));
    for t in &mut tests {
        if t.base_file.is_relative() {
            t.base_file = dir.join(&t.base_file);
        }
    }
    Ok(tests)
}

/// Compositions by id, loaded on demand from `<dir>/<id>.composition`,
/// plus base file contents.
#[derive(Debug, Default)]
pub struct Compositions {
    dir: PathBuf,
    loaded: HashMap<String, Arc<Composition>>,
    bases: HashMap<PathBuf, Arc<str>>,
}

impl Compositions {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Compositions { dir: dir.into(), ..Default::default() }
    }

    /// Loads `path` and makes the other compositions beside it available.
    pub fn with_file(path: &Path) -> Result<Self, HarnessError> {
        let mut c = Compositions::new(path.parent().unwrap_or(Path::new("")));
        let comp = Composition::load(path)?;
        c.loaded.insert(comp.id.clone(), Arc::new(comp));
        Ok(c)
    }

    pub fn get(&mut self, id: &str) -> Result<Arc<Composition>, HarnessError> {
        if let Some(c) = self.loaded.get(id) {
            return Ok(c.clone());
        }
        let path = self.dir.join(format!("{id}.composition"));
        if !path.exists() {
            return Err(HarnessError::UnknownComposition(id.to_string()));
        }
        let c = Arc::new(Composition::load(&path)?);
        self.loaded.insert(id.to_string(), c.clone());
        Ok(c)
    }

    pub fn base(&mut self, path: &Path) -> Result<Arc<str>, HarnessError> {
        if let Some(b) = self.bases.get(path) {
            return Ok(b.clone());
        }
        let b: Arc<str> = std::fs::read_to_string(path).map_err(io_err(path))?.into();
        self.bases.insert(path.to_path_buf(), b.clone());
        Ok(b)
    }
}
