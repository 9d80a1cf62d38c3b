//! Python bindings: compositions, editing sessions and test replay.

use std::path::PathBuf;
use std::sync::Arc;

use autobox_core::autobox::{Config, Decision, Heuristic, Session as CoreSession, Snapshot};
use autobox_core::grammar::Composition as CoreComposition;
use autobox_harness::report::run_manifest;
use autobox_harness::{load_manifest, Compositions, TestCase};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn config(heuristic: &str) -> PyResult<Config> {
    Ok(Config { heuristic: heuristic.parse::<Heuristic>().map_err(value_err)?, ..Config::default() })
}

/// A loaded language composition.
#[pyclass(frozen, module = "autobox")]
struct Composition {
    inner: Arc<CoreComposition>,
}

#[pymethods]
impl Composition {
    /// Loads a `.composition` file and the grammars beside it.
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        Ok(Composition { inner: Arc::new(CoreComposition::load(&path).map_err(value_err)?) })
    }

    #[getter]
    fn id(&self) -> String {
        self.inner.id.clone()
    }

    /// Language ids, outer language first.
    #[getter]
    fn languages(&self) -> Vec<String> {
        self.inner.langs.iter().map(|l| l.id.clone()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Composition({:?})", self.inner.id)
    }
}

fn snapshot_dict<'py>(py: Python<'py>, s: Snapshot) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("text", s.text)?;
    d.set_item("cursor", s.cursor)?;
    let boxes = PyList::empty(py);
    for b in s.boxes {
        let x = PyDict::new(py);
        x.set_item("id", b.id)?;
        x.set_item("start", b.start)?;
        x.set_item("end", b.end)?;
        x.set_item("lang", b.lang)?;
        x.set_item("state", b.state.name())?;
        boxes.append(x)?;
    }
    d.set_item("boxes", boxes)?;
    d.set_item("errors", s.errors)?;
    let cands = PyList::empty(py);
    for c in s.candidates {
        let x = PyDict::new(py);
        x.set_item("id", c.id)?;
        x.set_item("start", c.start)?;
        x.set_item("end", c.end)?;
        x.set_item("lang", c.lang)?;
        cands.append(x)?;
    }
    d.set_item("candidates", cands)?;
    Ok(d)
}

/// An editing session. Offsets are in characters.
#[pyclass(unsendable, module = "autobox")]
struct Session {
    inner: CoreSession,
}

#[pymethods]
impl Session {
    #[new]
    #[pyo3(signature = (composition, text = "", heuristic = "all"))]
    fn new(composition: &Composition, text: &str, heuristic: &str) -> PyResult<Self> {
        Ok(Session { inner: CoreSession::new(composition.inner.clone(), text, config(heuristic)?) })
    }

    #[getter]
    fn text(&self) -> String {
        self.inner.text().to_string()
    }

    #[getter]
    fn cursor(&self) -> usize {
        self.inner.cursor()
    }

    fn move_to(&mut self, pos: usize) -> PyResult<()> {
        self.inner.move_to(pos).map_err(value_err)
    }

    /// Types `ch` as one keypress and returns the decision taken.
    fn key(&mut self, ch: &str) -> &'static str {
        self.inner.key(ch).name()
    }

    /// Types `text` a character at a time.
    fn type_text(&mut self, text: &str) -> Vec<&'static str> {
        self.inner.type_str(text).iter().map(Decision::name).collect()
    }

    fn backspace(&mut self) -> &'static str {
        self.inner.backspace().name()
    }

    fn delete_forward(&mut self) -> &'static str {
        self.inner.delete_forward().name()
    }

    fn undo(&mut self) -> bool {
        self.inner.undo()
    }

    fn choose(&mut self, id: usize) -> PyResult<&'static str> {
        self.inner.choose(id).map(|d| d.name()).map_err(value_err)
    }

    fn mark_uncommitted(&mut self, box_id: u32) -> PyResult<()> {
        self.inner.mark_uncommitted(box_id).map_err(value_err)
    }

    fn snapshot<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        snapshot_dict(py, self.inner.snapshot())
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.stats();
        let d = PyDict::new(py);
        d.set_item("considered", s.considered)?;
        d.set_item("inserted", s.inserted)?;
        d.set_item("presented", s.presented)?;
        d.set_item("removed", s.removed)?;
        d.set_item("resized", s.resized)?;
        d.set_item("capped", s.capped)?;
        Ok(d)
    }
}

fn outcome_dict<'py>(
    py: Python<'py>,
    category: &str,
    box_span: usize,
    errors: Vec<usize>,
    times: &[std::time::Duration],
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("category", category)?;
    d.set_item("box_span", box_span)?;
    d.set_item("errors", errors)?;
    d.set_item("times_ms", times.iter().map(|t| t.as_secs_f64() * 1000.0).collect::<Vec<_>>())?;
    Ok(d)
}

/// Replays one test on `base` text and classifies the outcome.
#[pyfunction]
#[pyo3(signature = (composition, base, offset, span, fragment, heuristic = "all"))]
fn run_test<'py>(
    py: Python<'py>,
    composition: &Composition,
    base: &str,
    offset: usize,
    span: usize,
    fragment: String,
    heuristic: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let t = TestCase {
        base_file: PathBuf::new(),
        offset,
        span,
        fragment,
        composition: composition.inner.id.clone(),
        expected: None,
    };
    let o = autobox_harness::run_test(composition.inner.clone(), base, &t, config(heuristic)?, 0).map_err(value_err)?;
    outcome_dict(py, o.category.name(), o.box_span, o.error_positions, &o.per_keypress_times)
}

/// Replays every test of a manifest; compositions are looked up beside
/// `composition_path`.
#[pyfunction]
#[pyo3(signature = (composition_path, manifest, heuristic = "all"))]
fn run_manifest_file<'py>(
    py: Python<'py>,
    composition_path: PathBuf,
    manifest: PathBuf,
    heuristic: &str,
) -> PyResult<Bound<'py, PyList>> {
    let mut comps = Compositions::with_file(&composition_path).map_err(value_err)?;
    let tests = load_manifest(&manifest).map_err(value_err)?;
    let runs = run_manifest(&mut comps, &tests, config(heuristic)?).map_err(value_err)?;
    let out = PyList::empty(py);
    for (r, o) in runs {
        let d = outcome_dict(py, r.category.name(), r.box_span, r.errors, &o.per_keypress_times)?;
        d.set_item("composition", r.composition)?;
        d.set_item("expected", r.expected.map(|c| c.name()))?;
        out.append(d)?;
    }
    Ok(out)
}

#[pymodule]
fn autobox(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Composition>()?;
    m.add_class::<Session>()?;
    m.add_function(wrap_pyfunction!(run_test, m)?)?;
    m.add_function(wrap_pyfunction!(run_manifest_file, m)?)?;
    Ok(())
}
