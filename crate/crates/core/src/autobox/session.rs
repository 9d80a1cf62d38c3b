//! An editing session: keystrokes in, automatic box decisions out.

use std::sync::Arc;

use thiserror::Error;

use super::heuristics::Finder;
use super::{filter_rank, push_box, Cand, Config};
use crate::engine::{flag, Atom, Document, Kind, NodeId, Origin, ParseOutcome};
use crate::grammar::Composition;
use crate::lbox::{probe, recognise, Leaves, Tokens};

/// What the pipeline did after one keypress.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    None,
    Insert(NodeId),
    /// Several insertion candidates are waiting for [`Session::choose`].
    Present,
    Remove(NodeId),
    Resize(NodeId),
    /// Several new extents for one box are waiting for [`Session::choose`].
    PresentResize,
}

impl Decision {
    pub fn name(&self) -> &'static str {
        match self {
            Decision::None => "none",
            Decision::Insert(_) => "insert",
            Decision::Present => "present",
            Decision::Remove(_) => "remove",
            Decision::Resize(_) => "resize",
            Decision::PresentResize => "present_resize",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Parses with at least one error eligible for a box.
    pub considered: usize,
    pub inserted: usize,
    pub presented: usize,
    pub removed: usize,
    pub resized: usize,
    /// Recogniser runs stopped by the token cap.
    pub capped: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SessionError {
    #[error("no candidate with id {0}")]
    NoCandidate(usize),
    #[error("no language box with id {0}")]
    NoBox(u32),
    #[error("position {0} is past the end of the text")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxState {
    Committed,
    Uncommitted,
}

impl BoxState {
    pub fn name(self) -> &'static str {
        match self {
            BoxState::Committed => "committed",
            BoxState::Uncommitted => "uncommitted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxView {
    pub id: u32,
    pub start: usize,
    pub end: usize,
    pub lang: String,
    pub state: BoxState,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateView {
    pub id: usize,
    pub start: usize,
    pub end: usize,
    pub lang: String,
}

/// The visible state of a session. Offsets count characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub text: String,
    pub cursor: usize,
    pub boxes: Vec<BoxView>,
    pub errors: Vec<usize>,
    pub candidates: Vec<CandidateView>,
}

#[derive(Debug, Clone)]
enum Pending {
    Insert { root: NodeId, start: usize, end: usize, lang: usize, trigger: NodeId },
    Resize { boxid: NodeId, end: usize },
}

#[derive(Debug, Clone, Copy)]
struct Unit {
    version: u32,
    cursor: usize,
    /// Set when the unit is an automatic insertion.
    trigger: Option<NodeId>,
}

pub struct Session {
    doc: Document,
    cfg: Config,
    text: String,
    /// Byte offset in `text`.
    cursor: usize,
    pending: Vec<Pending>,
    undo: Vec<Unit>,
    stats: Stats,
}

impl Session {
    pub fn new(comp: Arc<Composition>, text: &str, cfg: Config) -> Session {
        Session {
            doc: Document::new(comp, text),
            cfg,
            text: text.to_string(),
            cursor: 0,
            pending: Vec::new(),
            undo: Vec::new(),
            stats: Stats::default(),
        }
    }

    pub fn document(&self) -> &Document {
        &self.doc
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    /// Cursor position in characters.
    pub fn cursor(&self) -> usize {
        self.to_chars(self.cursor)
    }

    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    fn to_bytes(&self, chars: usize) -> Option<usize> {
        if self.text.is_ascii() {
            return (chars <= self.text.len()).then_some(chars);
        }
        self.text.char_indices().map(|(i, _)| i).chain(std::iter::once(self.text.len())).nth(chars)
    }

    fn to_chars(&self, bytes: usize) -> usize {
        if self.text.is_ascii() {
            bytes
        } else {
            self.text[..bytes].chars().count()
        }
    }

    // ---- user actions ----

    /// Moves the cursor. Uncommitted boxes the cursor leaves become
    /// committed.
    pub fn move_to(&mut self, pos: usize) -> Result<(), SessionError> {
        let to = self.to_bytes(pos).ok_or(SessionError::OutOfRange(pos))?;
        let from = self.cursor;
        let leaving: Vec<NodeId> = self
            .doc
            .live_boxes()
            .into_iter()
            .filter(|&b| {
                let (s, e) = self.box_span(b);
                !self.doc.is_committed(b) && s <= from && from <= e && !(s <= to && to <= e)
            })
            .collect();
        if !leaving.is_empty() {
            self.doc.begin_version();
            for b in leaving {
                self.doc.set_committed(b, true);
            }
        }
        self.cursor = to;
        Ok(())
    }

    /// Types `s` at the cursor as one keypress.
    pub fn key(&mut self, s: &str) -> Decision {
        self.edit(self.cursor, 0, s)
    }

    pub fn type_str(&mut self, s: &str) -> Vec<Decision> {
        s.chars().map(|c| self.key(c.encode_utf8(&mut [0; 4]))).collect()
    }

    pub fn backspace(&mut self) -> Decision {
        match self.text[..self.cursor].chars().next_back() {
            Some(c) => self.edit(self.cursor - c.len_utf8(), c.len_utf8(), ""),
            None => Decision::None,
        }
    }

    pub fn delete_forward(&mut self) -> Decision {
        match self.text[self.cursor..].chars().next() {
            Some(c) => self.edit(self.cursor, c.len_utf8(), ""),
            None => Decision::None,
        }
    }

    /// Deletes `len` characters at character offset `pos` as one edit,
    /// leaving the cursor there.
    pub fn delete_range(&mut self, pos: usize, len: usize) -> Result<Decision, SessionError> {
        let a = self.to_bytes(pos).ok_or(SessionError::OutOfRange(pos))?;
        let b = self.to_bytes(pos + len).ok_or(SessionError::OutOfRange(pos + len))?;
        Ok(self.edit(a, b - a, ""))
    }

    /// Undoes the last edit or automatic action. Undoing an automatic
    /// insertion stops its error from producing boxes again.
    pub fn undo(&mut self) -> bool {
        let Some(u) = self.undo.pop() else { return false };
        self.doc.revert_to(u.version);
        if let Some(t) = u.trigger {
            self.doc.set_noinsert(t);
        }
        self.text = self.doc.text_all();
        self.cursor = u.cursor.min(self.text.len());
        self.pending.clear();
        true
    }

    /// Applies presented candidate `id`.
    pub fn choose(&mut self, id: usize) -> Result<Decision, SessionError> {
        let p = self.pending.get(id).cloned().ok_or(SessionError::NoCandidate(id))?;
        self.pending.clear();
        let unit = Unit { version: self.doc.version(), cursor: self.cursor, trigger: None };
        let d = match p {
            Pending::Insert { root, start, end, lang, trigger } => {
                let (b, _) = self.doc.insert_box(root, start, end, lang, Origin::Automatic, Some(trigger));
                self.undo.push(Unit { trigger: Some(trigger), ..unit });
                self.stats.inserted += 1;
                Decision::Insert(b)
            }
            Pending::Resize { boxid, end } => {
                self.doc.resize_box(boxid, end);
                self.undo.push(unit);
                self.stats.resized += 1;
                Decision::Resize(boxid)
            }
        };
        Ok(d)
    }

    /// Makes a committed box subject to removal and resizing again.
    pub fn mark_uncommitted(&mut self, boxid: u32) -> Result<(), SessionError> {
        if !self.doc.live_boxes().contains(&boxid) {
            return Err(SessionError::NoBox(boxid));
        }
        if self.doc.is_committed(boxid) {
            self.doc.begin_version();
            self.doc.set_committed(boxid, false);
        }
        Ok(())
    }

    pub fn snapshot(&self) -> Snapshot {
        let comp = self.doc.composition();
        let boxes = self
            .doc
            .live_boxes()
            .into_iter()
            .map(|b| {
                let (s, e) = self.box_span(b);
                BoxView {
                    id: b,
                    start: self.to_chars(s),
                    end: self.to_chars(e),
                    lang: comp.langs[self.doc.box_data(b).lang].id.clone(),
                    state: if self.doc.is_committed(b) { BoxState::Committed } else { BoxState::Uncommitted },
                }
            })
            .collect();
        let errors = self.doc.error_nodes().into_iter().map(|n| self.to_chars(self.doc.global_offset(n))).collect();
        let candidates = self
            .pending
            .iter()
            .enumerate()
            .map(|(id, p)| {
                let (root, start, end, lang) = match *p {
                    Pending::Insert { root, start, end, lang, .. } => (root, start, end, lang),
                    Pending::Resize { boxid, end } => {
                        let root = self.doc.tree_root(boxid);
                        (root, self.doc.offset(boxid), end, self.doc.box_data(boxid).lang)
                    }
                };
                let base = self.tree_base(root);
                CandidateView {
                    id,
                    start: self.to_chars(base + start),
                    end: self.to_chars(base + end),
                    lang: comp.langs[lang].id.clone(),
                }
            })
            .collect();
        Snapshot { text: self.text.clone(), cursor: self.cursor(), boxes, errors, candidates }
    }

    /// Whether candidates are waiting for a choice.
    pub fn has_pending(&self) -> bool {
        !self.pending.is_empty()
    }

    // ---- edits ----

    fn tree_base(&self, root: NodeId) -> usize {
        self.doc.owner_of(root).map_or(0, |b| self.doc.global_offset(b))
    }

    fn box_span(&self, b: NodeId) -> (usize, usize) {
        let s = self.doc.global_offset(b);
        (s, s + self.doc.len(b))
    }

    /// Replaces `del` bytes at byte `a` with `ins`, then runs the pipeline.
    fn edit(&mut self, a: usize, del: usize, ins: &str) -> Decision {
        let unit = Unit { version: self.doc.version(), cursor: self.cursor, trigger: None };
        let b = a + del;
        // Boxes the deletion cuts through dissolve first.
        while let Some(x) = self.doc.live_boxes().into_iter().find(|&x| {
            let (s, e) = self.box_span(x);
            del > 0 && ((s < a && a < e && e < b) || (a < s && s < b && b < e))
        }) {
            self.doc.remove_box(x);
        }
        let mut root = self.doc.root();
        let mut base = 0;
        for x in self.doc.live_boxes() {
            let (s, e) = self.box_span(x);
            let inside = if del == 0 { s < a && a < e } else { s <= a && b <= e && !(s == a && b == e) };
            if inside {
                root = self.doc.box_data(x).inner;
                base = s;
            }
        }
        let atoms = if ins.is_empty() { vec![] } else { vec![Atom::Text(ins.to_string())] };
        self.doc.splice(root, a - base, b - base, atoms);
        let vr = self.doc.version();
        let out = self.doc.parse(root);
        self.text.replace_range(a..b, ins);
        self.cursor = a + ins.len();
        self.undo.push(unit);
        self.after_parse(root, vr, out)
    }

    // ---- the pipeline ----

    fn after_parse(&mut self, root: NodeId, vr: u32, out: ParseOutcome) -> Decision {
        self.pending.clear();
        let unit = Unit { version: self.doc.version(), cursor: self.cursor, trigger: None };
        let open: Vec<NodeId> = self.doc.live_boxes().into_iter().filter(|&b| !self.doc.is_committed(b)).collect();
        for &b in &open {
            if self.should_remove(b) {
                self.doc.remove_box(b);
                self.undo.push(unit);
                self.stats.removed += 1;
                return Decision::Remove(b);
            }
        }
        for &b in &open {
            let ends = self.resize_options(b);
            match ends.len() {
                0 => {}
                1 => {
                    self.doc.resize_box(b, ends[0]);
                    self.undo.push(unit);
                    self.stats.resized += 1;
                    return Decision::Resize(b);
                }
                _ => {
                    self.pending = ends.into_iter().map(|end| Pending::Resize { boxid: b, end }).collect();
                    self.stats.presented += 1;
                    return Decision::PresentResize;
                }
            }
        }
        // Later errors of the same parse follow from recovery at the first.
        let Some(trigger) = out.errors.first().copied().filter(|&n| !self.doc.noinsert(n)) else {
            return Decision::None;
        };
        self.stats.considered += 1;
        let cands = self.candidates(root, vr, trigger, &out.error_stacks[0]);
        match cands.len() {
            0 => Decision::None,
            1 => {
                let c = &cands[0];
                let (b, _) = self.doc.insert_box(root, c.start, c.end, c.lang, Origin::Automatic, Some(trigger));
                self.undo.push(Unit { trigger: Some(trigger), ..unit });
                self.stats.inserted += 1;
                Decision::Insert(b)
            }
            _ => {
                self.pending = cands
                    .into_iter()
                    .map(|c| Pending::Insert { root, start: c.start, end: c.end, lang: c.lang, trigger })
                    .collect();
                self.stats.presented += 1;
                Decision::Present
            }
        }
    }

    fn candidates(&mut self, root: NodeId, vr: u32, trigger: NodeId, stack: &[crate::engine::StackEntry]) -> Vec<Cand> {
        let mut f = Finder::new(&self.doc, root, vr, self.cfg.recogniser_cap);
        f.run(self.cfg.heuristic, trigger, stack);
        self.stats.capped += f.capped;
        let found = std::mem::take(&mut f.out);
        filter_rank(&self.doc, root, found, self.cfg.follow_tokens)
    }

    /// Replays a box's content as outer text from the states before it.
    /// Returns whether every token starting inside the box parses, and
    /// whether the first token after it does too.
    fn content_in_outer(&self, b: NodeId, states: &[u32]) -> (bool, bool) {
        let doc = &self.doc;
        let root = doc.tree_root(b);
        let s = doc.offset(b);
        let e = s + doc.len(b);
        let lang = doc.language(root);
        let mut st = states.to_vec();
        let content = doc.subtree_text(doc.box_data(b).inner);
        let src = Leaves::from_offset(doc, root, e, doc.version()).with_prefix(content);
        let mut toks = Tokens::new(lang, src, s, false);
        let p = probe(&lang.tables, &mut st, &mut toks, e, 1);
        (p.error.is_none_or(|x| x >= e), p.error.is_none())
    }

    fn should_remove(&self, b: NodeId) -> bool {
        let doc = &self.doc;
        let root = doc.tree_root(b);
        let Some(states) = doc.recreate_states(root, b, doc.version()) else { return false };
        let inner = doc.box_data(b).inner;
        let e = doc.offset(b) + doc.len(b);
        let (content_ok, follow_ok) = self.content_in_outer(b, &states);
        if !content_ok {
            return false;
        }
        let accepted = doc.has(inner, flag::ACCEPTED);
        if !accepted {
            return true;
        }
        let next = doc.first_solid_leaf_from(root, e);
        let mut in_error = doc.is_error(b) || (doc.kind(next) != Kind::Eos && doc.is_error(next));
        let mut x = b;
        while let Some(p) = doc.parent(x).filter(|_| !in_error) {
            in_error = doc.has(p, flag::ERRPATH);
            x = p;
        }
        if in_error {
            return true;
        }
        follow_ok
    }

    /// New ends for an uncommitted box: growing over following text while
    /// its content parses, or shrinking while it does not.
    fn resize_options(&self, b: NodeId) -> Vec<usize> {
        let doc = &self.doc;
        let comp = doc.composition();
        let root = doc.tree_root(b);
        let data = doc.box_data(b);
        let (s, len) = (doc.offset(b), doc.len(b));
        let e = s + len;
        let Some(states) = doc.recreate_states(root, b, doc.version()) else { return vec![] };
        let outer = &comp.langs[doc.lang_of(root)];
        let sym = doc.sym(b);
        let mut out = Vec::new();
        if doc.has(data.inner, flag::ACCEPTED) {
            let src = Leaves::from_offset(doc, root, e, doc.version()).with_prefix(doc.subtree_text(data.inner));
            let rec = recognise(comp, data.lang, src, s, self.cfg.recogniser_cap);
            for end in rec.ends.into_iter().filter(|&x| x > e) {
                let Some(mut st) = push_box(&outer.tables, &states, sym) else { continue };
                let src = Leaves::from_offset(doc, root, end, doc.version());
                let mut toks = Tokens::new(outer, src, end, false);
                if probe(&outer.tables, &mut st, &mut toks, end, 1).error.is_none() {
                    out.push(end);
                }
            }
        } else {
            let text = doc.subtree_text(data.inner);
            let rec = recognise(comp, data.lang, Leaves::only(doc, text.clone()), s, self.cfg.recogniser_cap);
            for end in rec.ends.into_iter().filter(|&x| x < e) {
                let Some(mut st) = push_box(&outer.tables, &states, sym) else { continue };
                let src = Leaves::from_offset(doc, root, e, doc.version()).with_prefix(text[end - s..].to_string());
                let mut toks = Tokens::new(outer, src, end, false);
                if probe(&outer.tables, &mut st, &mut toks, e, 1).error.is_none() {
                    out.push(end);
                }
            }
        }
        out
    }
}
