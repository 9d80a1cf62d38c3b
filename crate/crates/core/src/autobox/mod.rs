//! Automatic language boxes: finding candidates after a syntax error,
//! choosing among them, and the per-keypress removal, resize and insertion
//! pipeline of an editing [`Session`].

mod heuristics;
mod session;

use std::fmt;
use std::str::FromStr;

pub use session::{BoxState, BoxView, CandidateView, Decision, Session, SessionError, Snapshot, Stats};

use crate::engine::{Document, NodeId};
use crate::grammar::{Action, LrTables};
use crate::lbox::{probe, Leaves, Probe, Tokens};

/// Which heuristics propose candidate start positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heuristic {
    All,
    ParseTree,
    Stack,
    Line,
}

impl Heuristic {
    pub const EVERY: [Heuristic; 4] = [Heuristic::All, Heuristic::ParseTree, Heuristic::Stack, Heuristic::Line];

    pub fn name(self) -> &'static str {
        match self {
            Heuristic::All => "all",
            Heuristic::ParseTree => "parse_tree",
            Heuristic::Stack => "stack",
            Heuristic::Line => "line",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Heuristic::All => "All",
            Heuristic::ParseTree => "Parse tree",
            Heuristic::Stack => "Stack",
            Heuristic::Line => "Line",
        }
    }

    fn uses(self, h: Heuristic) -> bool {
        self == Heuristic::All || self == h
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Heuristic::EVERY
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| format!("unknown heuristic `{s}` (expected all, parse_tree, stack or line)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub heuristic: Heuristic,
    /// Outer tokens after the longest candidate that every surviving
    /// candidate must parse up to.
    pub follow_tokens: usize,
    pub recogniser_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { heuristic: Heuristic::All, follow_tokens: 10, recogniser_cap: crate::lbox::RECOGNISER_CAP }
    }
}

/// A candidate box `start..end` of language `lang` in some tree, with the
/// outer LR states just before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Cand {
    pub start: usize,
    pub end: usize,
    pub lang: usize,
    pub states: Vec<u32>,
}

/// States after shifting the box terminal `lbox`, if it can be shifted.
pub(crate) fn push_box(t: &LrTables, states: &[u32], lbox: u32) -> Option<Vec<u32>> {
    let mut s = states.to_vec();
    match t.reduce_for(&mut s, lbox) {
        Action::Shift(g) => {
            s.push(g);
            Some(s)
        }
        _ => None,
    }
}

/// Replays the outer tokens after a candidate box on top of it.
fn probe_after(doc: &Document, root: NodeId, c: &Cand, mark: usize, after: usize) -> Option<Probe> {
    let comp = doc.composition();
    let outer = doc.lang_of(root);
    let lbox = comp.lbox_for(outer, c.lang)?;
    let t = &comp.langs[outer].tables;
    let mut states = push_box(t, &c.states, lbox)?;
    let src = Leaves::from_offset(doc, root, c.end, doc.version());
    let mut toks = Tokens::new(&comp.langs[outer], src, c.end, false);
    Some(probe(t, &mut states, &mut toks, mark, after))
}

/// Keeps the candidates whose first following token parses, then those
/// that parse as far as the longest one does (up to `follow` tokens past
/// it). Survivors are ordered by start, end and language.
pub(crate) fn filter_rank(doc: &Document, root: NodeId, cands: Vec<Cand>, follow: usize) -> Vec<Cand> {
    let mut ok: Vec<Cand> = cands
        .into_iter()
        .filter(|c| probe_after(doc, root, c, c.end, 1).is_some_and(|p| p.error.is_none()))
        .collect();
    let Some(best) = ok
        .iter()
        .max_by(|a, b| a.end.cmp(&b.end).then((b.start, b.lang).cmp(&(a.start, a.lang))))
        .cloned()
    else {
        return ok;
    };
    let p = probe_after(doc, root, &best, best.end, follow).expect("best candidate probes");
    let mp = p.error.unwrap_or(p.end);
    ok.retain(|c| *c == best || probe_after(doc, root, c, mp, 0).is_some_and(|p| p.error.is_none()));
    ok.sort_by_key(|c| (c.start, c.end, c.lang));
    ok
}
