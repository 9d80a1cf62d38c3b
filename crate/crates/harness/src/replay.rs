use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use autobox_core::autobox::{Config, Decision, Session, Snapshot};
use autobox_core::grammar::Composition;
use serde::{Deserialize, Serialize};

use crate::{HarnessError, TestCase};

/// How a replay ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    CompleteInsertion,
    PartialInsertionNoErrors,
    PartialInsertionErrors,
    NoInsertionValid,
    NoInsertionErrors,
    NoInsertionMulti,
}

impl Category {
    pub const EVERY: [Category; 6] = [
        Category::CompleteInsertion,
        Category::PartialInsertionNoErrors,
        Category::PartialInsertionErrors,
        Category::NoInsertionValid,
        Category::NoInsertionErrors,
        Category::NoInsertionMulti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::CompleteInsertion => "complete_insertion",
            Category::PartialInsertionNoErrors => "partial_insertion_no_errors",
            Category::PartialInsertionErrors => "partial_insertion_errors",
            Category::NoInsertionValid => "no_insertion_valid",
            Category::NoInsertionErrors => "no_insertion_errors",
            Category::NoInsertionMulti => "no_insertion_multi",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Category::CompleteInsertion => "Complete insertion (No errors)",
            Category::PartialInsertionNoErrors => "Partial insertion (No errors)",
            Category::PartialInsertionErrors => "Partial insertion (Errors)",
            Category::NoInsertionValid => "No insertion (Valid)",
            Category::NoInsertionErrors => "No insertion (Errors)",
            Category::NoInsertionMulti => "No insertion (Multi)",
        }
    }

    pub fn acceptable(self) -> bool {
        !matches!(self, Category::PartialInsertionErrors | Category::NoInsertionErrors)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub category: Category,
    /// Characters covered by boxes.
    pub box_span: usize,
    pub per_keypress_times: Vec<Duration>,
    /// Character offsets of error marks left in the document.
    pub error_positions: Vec<usize>,
}

impl Outcome {
    pub fn mean_time(&self) -> Duration {
        match self.per_keypress_times.len() {
            0 => Duration::ZERO,
            n => self.per_keypress_times.iter().sum::<Duration>() / n as u32,
        }
    }

    pub fn max_time(&self) -> Duration {
        self.per_keypress_times.iter().copied().max().unwrap_or_default()
    }
}

/// Characters covered by the union of the box spans.
fn covered(s: &Snapshot) -> usize {
    let mut spans: Vec<(usize, usize)> = s.boxes.iter().map(|b| (b.start, b.end)).collect();
    spans.sort_unstable();
    let (mut total, mut reach) = (0, 0);
    for (a, b) in spans {
        let a = a.max(reach);
        if b > a {
            total += b - a;
            reach = b;
        }
    }
    total
}

/// Category of the state a replay ended in, where the fragment was typed
/// over `start..start + len` and `last` is the decision of the final
/// keypress.
pub fn classify(s: &Snapshot, last: &Decision, start: usize, len: usize) -> Category {
    if matches!(last, Decision::Present | Decision::PresentResize) {
        return Category::NoInsertionMulti;
    }
    let errors = !s.errors.is_empty();
    if s.boxes.is_empty() {
        return if errors { Category::NoInsertionErrors } else { Category::NoInsertionValid };
    }
    let exact = s.boxes.iter().any(|b| b.start == start && b.end == start + len) && covered(s) == len;
    match (exact, errors) {
        (true, false) => Category::CompleteInsertion,
        (false, false) => Category::PartialInsertionNoErrors,
        (_, true) => Category::PartialInsertionErrors,
    }
}

/// Replays `t` on `base` and classifies the result.
pub fn run_test(comp: Arc<Composition>, base: &str, t: &TestCase, cfg: Config, index: usize) -> Result<Outcome, HarnessError> {
    let bad = |reason: String| HarnessError::BadTest { index, reason };
    if t.fragment.is_empty() {
        return Err(bad("empty fragment".into()));
    }
    let chars = base.chars().count();
    if t.offset + t.span > chars {
        return Err(bad(format!("offset {} + span {} past end of {} characters", t.offset, t.span, chars)));
    }
    let mut s = Session::new(comp, base, cfg);
    s.move_to(t.offset).map_err(|e| bad(e.to_string()))?;
    if t.span > 0 {
        s.delete_range(t.offset, t.span).map_err(|e| bad(e.to_string()))?;
    }
    let mut times = Vec::with_capacity(t.fragment.len());
    let mut last = Decision::None;
    let mut buf = [0u8; 4];
    for c in t.fragment.chars() {
        let at = Instant::now();
        last = s.key(c.encode_utf8(&mut buf));
        times.push(at.elapsed());
    }
    let snap = s.snapshot();
    let category = classify(&snap, &last, t.offset, t.fragment.chars().count());
    Ok(Outcome { category, box_span: covered(&snap), per_keypress_times: times, error_positions: snap.errors })
}
