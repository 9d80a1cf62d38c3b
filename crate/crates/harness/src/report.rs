//! Per-run outcome files and the summary tables built from them.
//!
//! A run with heuristic `h` writes `outcomes-<h>.ndjson` (and with timing,
//! `timing-<h>.csv` and `timing-<h>.txt`). The tables are rebuilt after each
//! run from every outcomes file in the directory, so running each heuristic
//! once into the same directory yields the full tables.

use std::fs;
use std::io::Write;
use std::path::Path;

use autobox_core::autobox::{Config, Heuristic};
use serde::{Deserialize, Serialize};

use crate::replay::{run_test, Category, Outcome};
use crate::{io_err, Compositions, HarnessError, TestCase};

/// The timing-free part of an outcome, as written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub index: usize,
    pub composition: String,
    pub category: Category,
    pub box_span: usize,
    pub errors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Category>,
}

impl Record {
    pub fn mismatched(&self) -> bool {
        self.expected.is_some_and(|e| e != self.category)
    }
}

pub fn run_manifest(
    comps: &mut Compositions,
    tests: &[TestCase],
    cfg: Config,
) -> Result<Vec<(Record, Outcome)>, HarnessError> {
    let mut out = Vec::with_capacity(tests.len());
    for (index, t) in tests.iter().enumerate() {
        let comp = comps.get(&t.composition)?;
        let base = comps.base(&t.base_file)?;
        let o = run_test(comp, &base, t, cfg, index)?;
        let r = Record {
            index,
            composition: t.composition.clone(),
            category: o.category,
            box_span: o.box_span,
            errors: o.error_positions.clone(),
            expected: t.expected.filter(|_| cfg.heuristic == Heuristic::All),
        };
        out.push((r, o));
    }
    Ok(out)
}

fn outcomes_path(dir: &Path, h: Heuristic) -> std::path::PathBuf {
    dir.join(format!("outcomes-{}.ndjson", h.name()))
}

pub fn write_outcomes(dir: &Path, h: Heuristic, records: &[Record]) -> Result<(), HarnessError> {
    let path = outcomes_path(dir, h);
    let mut text = String::new();
    for r in records {
        text.push_str(&serde_json::to_string(r).expect("records serialise"));
        text.push('\n');
    }
    fs::write(&path, text).map_err(io_err(&path))
}

pub fn read_outcomes(dir: &Path, h: Heuristic) -> Result<Option<Vec<Record>>, HarnessError> {
    let path = outcomes_path(dir, h);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).map_err(io_err(&path))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|source| HarnessError::Json { path: path.clone(), source }))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// `100 * n / total` rounded half up to one decimal.
pub fn percent(n: usize, total: usize) -> String {
    if total == 0 {
        return "0.0".into();
    }
    let tenths = (2000 * n + total) / (2 * total);
    format!("{}.{}", tenths / 10, tenths % 10)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory csv");
        for r in &self.rows {
            w.write_record(r).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 cells")
    }

    /// Left-aligned first column, right-aligned numbers.
    pub fn to_text(&self) -> String {
        let all: Vec<&Vec<String>> = std::iter::once(&self.header).chain(&self.rows).collect();
        let widths: Vec<usize> =
            (0..self.header.len()).map(|i| all.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for r in all {
            let mut line = String::new();
            for (i, cell) in r.iter().enumerate() {
                if i == 0 {
                    line.push_str(&format!("{cell:<w$}", w = widths[0]));
                } else {
                    line.push_str(&format!("  {cell:>w$}", w = widths[i]));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Acceptable percentages per composition, one row per heuristic run.
pub fn acceptable_table(runs: &[(Heuristic, Vec<Record>)]) -> Table {
    let mut comps: Vec<String> = Vec::new();
    for (_, rs) in runs {
        for r in rs {
            if !comps.contains(&r.composition) {
                comps.push(r.composition.clone());
            }
        }
    }
    let mut header = vec![String::new()];
    header.extend(comps.iter().cloned());
    header.push("Overall".into());
    let mut rows = Vec::new();
    if let Some((_, first)) = runs.first() {
        let mut row = vec!["# Tests".to_string()];
        row.extend(comps.iter().map(|c| first.iter().filter(|r| &r.composition == c).count().to_string()));
        row.push(first.len().to_string());
        rows.push(row);
    }
    for (h, rs) in runs {
        let mut row = vec![h.title().to_string()];
        for c in &comps {
            let mine: Vec<&Record> = rs.iter().filter(|r| &r.composition == c).collect();
            row.push(percent(mine.iter().filter(|r| r.category.acceptable()).count(), mine.len()));
        }
        row.push(percent(rs.iter().filter(|r| r.category.acceptable()).count(), rs.len()));
        rows.push(row);
    }
    Table { header, rows }
}

/// Share of each category over all tests, one row per heuristic run.
pub fn category_table(runs: &[(Heuristic, Vec<Record>)]) -> Table {
    let mut header = vec![String::new()];
    header.extend(Category::EVERY.iter().map(|c| c.title().to_string()));
    let rows = runs
        .iter()
        .map(|(h, rs)| {
            let mut row = vec![h.title().to_string()];
            row.extend(Category::EVERY.iter().map(|&c| percent(rs.iter().filter(|r| r.category == c).count(), rs.len())));
            row
        })
        .collect();
    Table { header, rows }
}

/// Rebuilds `acceptable.{csv,txt}` and `categories.{csv,txt}` from the
/// outcome files in `dir`.
pub fn write_tables(dir: &Path) -> Result<(), HarnessError> {
    let mut runs = Vec::new();
    for h in Heuristic::EVERY {
        if let Some(rs) = read_outcomes(dir, h)? {
            runs.push((h, rs));
        }
    }
    if runs.is_empty() {
        return Err(HarnessError::NoOutcomes);
    }
    for (name, t) in [("acceptable", acceptable_table(&runs)), ("categories", category_table(&runs))] {
        for (ext, text) in [("csv", t.to_csv()), ("txt", t.to_text())] {
            let path = dir.join(format!("{name}.{ext}"));
            fs::write(&path, text).map_err(io_err(&path))?;
        }
    }
    Ok(())
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingSummary {
    pub keypresses: usize,
    pub mean_ms: f64,
    pub max_ms: f64,
}

pub fn timing_summary(outcomes: &[&Outcome]) -> TimingSummary {
    let times: Vec<f64> = outcomes.iter().flat_map(|o| o.per_keypress_times.iter().map(|&d| ms(d))).collect();
    let n = times.len();
    TimingSummary {
        keypresses: n,
        mean_ms: if n == 0 { 0.0 } else { times.iter().sum::<f64>() / n as f64 },
        max_ms: times.iter().copied().fold(0.0, f64::max),
    }
}

/// Writes per-test keypress times and an overall summary.
pub fn write_timing(dir: &Path, h: Heuristic, runs: &[(Record, Outcome)]) -> Result<TimingSummary, HarnessError> {
    let path = dir.join(format!("timing-{}.csv", h.name()));
    let file = fs::File::create(&path).map_err(io_err(&path))?;
    let mut w = csv::Writer::from_writer(file);
    let csv_err = |source| HarnessError::Csv { path: path.clone(), source };
    w.write_record(["index", "composition", "keypresses", "mean_ms", "max_ms"]).map_err(csv_err)?;
    for (r, o) in runs {
        w.write_record([
            r.index.to_string(),
            r.composition.clone(),
            o.per_keypress_times.len().to_string(),
            format!("{:.3}", ms(o.mean_time())),
            format!("{:.3}", ms(o.max_time())),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(io_err(&path))?;
    let s = timing_summary(&runs.iter().map(|(_, o)| o).collect::<Vec<_>>());
    let path = dir.join(format!("timing-{}.txt", h.name()));
    let mut f = fs::File::create(&path).map_err(io_err(&path))?;
    writeln!(f, "keypresses {}\nmean_ms {:.3}\nmax_ms {:.3}", s.keypresses, s.mean_ms, s.max_ms).map_err(io_err(&path))?;
    Ok(s)
}
