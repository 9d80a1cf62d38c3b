//! Language boxes: recognising inner-language programs in outer text,
//! recreating parse stacks, and inserting, removing and resizing boxes.

mod edit;
mod stream;

use std::collections::HashSet;

pub(crate) use stream::{Leaves, Tokens};

use crate::engine::{flag, Document, Kind, NodeId};
use crate::grammar::{lalr, Action, Composition, LrTables};

/// Most tokens a single recogniser run reads.
pub const RECOGNISER_CAP: usize = 1000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Recognised {
    /// End offsets of every non-empty prefix that is a complete program.
    pub ends: Vec<usize>,
    /// The run stopped at the token cap.
    pub capped: bool,
}

/// Runs language `lang`'s recogniser over the tokens of `src` starting at
/// `start`. Stops at the first token that cannot be shifted, at a box, or
/// at the end of the text.
pub(crate) fn recognise(comp: &Composition, lang: usize, src: Leaves, start: usize, cap: usize) -> Recognised {
    let l = &comp.langs[lang];
    let t = &l.tables;
    let mut out = Recognised::default();
    let mut states = vec![0u32];
    for (n, tok) in Tokens::new(l, src, start, true).enumerate() {
        if n == 0 && !comp.hint_allows_term(lang, tok.term) {
            break;
        }
        if n == cap {
            out.capped = true;
            break;
        }
        match t.reduce_for(&mut states, tok.term) {
            Action::Shift(s) => states.push(s),
            _ => break,
        }
        let mut probe = states.clone();
        if t.reduce_for(&mut probe, lalr::EOS) == Action::Accept {
            out.ends.push(tok.end);
        }
    }
    out
}

/// Result of replaying outer tokens on a stack of states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Probe {
    /// Start of the first token that could not be parsed.
    pub error: Option<usize>,
    /// End of the last token parsed.
    pub end: usize,
}

/// Parses every token starting before `mark` and then `after` more,
/// counting the end of the text as a token.
pub(crate) fn probe(t: &LrTables, states: &mut Vec<u32>, toks: &mut Tokens, mark: usize, after: usize) -> Probe {
    let mut seen = 0;
    let mut end = toks.pos;
    loop {
        let (term, start, tend) = match toks.next() {
            Some(k) => (k.term, k.start, k.end),
            None => (lalr::EOS, toks.pos, toks.pos),
        };
        if start >= mark {
            if seen == after {
                return Probe { error: None, end };
            }
            seen += 1;
        }
        match t.reduce_for(states, term) {
            Action::Shift(s) => {
                states.push(s);
                end = tend;
            }
            Action::Accept => return Probe { error: None, end: tend },
            _ => return Probe { error: Some(start), end },
        }
    }
}

impl Document {
    /// Text between two offsets of the tree under `root`, box contents
    /// included.
    pub fn text_range(&self, root: NodeId, a: usize, b: usize) -> String {
        let mut out = String::new();
        let mut src = Leaves::from_offset(self, root, a, self.version());
        let mut pos = a;
        while pos < b {
            let before = out.len();
            match src.fill(&mut out) {
                stream::Fill::Text => pos += out.len() - before,
                stream::Fill::Box(n, len) => {
                    out.push_str(&self.subtree_text(self.box_data(n).inner));
                    pos += len;
                }
                stream::Fill::End => break,
            }
        }
        out.truncate(out.len() - (pos - b.min(pos)));
        out
    }

    /// Runs the recogniser for `lang` over the tree under `root` from
    /// offset `start`.
    pub fn recognise_at(&self, root: NodeId, start: usize, lang: usize) -> Recognised {
        let src = Leaves::from_offset(self, root, start, self.version());
        recognise(self.composition(), lang, src, start, RECOGNISER_CAP)
    }

    /// Recognises `text` alone as language `lang`.
    pub fn recognise_text(&self, text: &str, lang: usize) -> Recognised {
        recognise(self.composition(), lang, Leaves::only(self, text.to_string()), 0, RECOGNISER_CAP)
    }

    /// The LR states the parser would hold just before shifting `target`,
    /// rebuilt from the tree under `root` at version `v`. Clean subtrees
    /// are pushed whole; `None` if the text before `target` does not parse.
    pub fn recreate_states(&self, root: NodeId, target: NodeId, v: u32) -> Option<Vec<u32>> {
        let t = &self.language(root).tables;
        let mut path = HashSet::new();
        let mut x = target;
        while let Some(p) = self.parent_at(x, v) {
            path.insert(p);
            x = p;
        }
        if x != root {
            return None;
        }
        let mut states = vec![0u32];
        let mut todo: Vec<NodeId> = self.children_at(root, v).iter().rev().copied().collect();
        while let Some(n) = todo.pop() {
            if n == target {
                return Some(states);
            }
            match self.kind(n) {
                Kind::Bos => {}
                Kind::Nonterm => {
                    let on_path = path.contains(&n);
                    if !on_path && self.len_at(n, v) == 0 {
                        continue;
                    }
                    if !on_path && !self.has_at(n, flag::DIRTY | flag::ERRPATH, v) {
                        if let Some(ft) = self.first_solid_sym_at(n, v) {
                            t.reduce_for(&mut states, ft);
                            let top = *states.last().unwrap();
                            if top == self.state_before(n) {
                                if let Some(g) = t.goto(top, self.sym_at(n, v)) {
                                    states.push(g);
                                    continue;
                                }
                            }
                        }
                    }
                    todo.extend(self.children_at(n, v).iter().rev());
                }
                Kind::Token if self.language(n).is_whitespace(self.sym_at(n, v)) => {}
                Kind::Token | Kind::LBox => match t.reduce_for(&mut states, self.sym_at(n, v)) {
                    Action::Shift(s) => states.push(s),
                    _ => return None,
                },
                Kind::Eos | Kind::Root => return None,
            }
        }
        None
    }
}
