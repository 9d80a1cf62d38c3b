//! Candidate start positions around a syntax error.

use std::collections::{HashMap, HashSet};

use super::{Cand, Heuristic};
use crate::engine::{Document, Kind, NodeId, StackEntry};
use crate::lbox::{recognise, Leaves, Recognised};

pub(crate) struct Finder<'a> {
    doc: &'a Document,
    root: NodeId,
    /// Version the failed parse read its input from.
    vr: u32,
    cap: usize,
    states: HashMap<NodeId, Option<Vec<u32>>>,
    recognised: HashMap<(NodeId, usize), Recognised>,
    seen: HashSet<(usize, usize, usize)>,
    pub out: Vec<Cand>,
    pub capped: usize,
}

impl<'a> Finder<'a> {
    pub fn new(doc: &'a Document, root: NodeId, vr: u32, cap: usize) -> Self {
        Finder {
            doc,
            root,
            vr,
            cap,
            states: HashMap::new(),
            recognised: HashMap::new(),
            seen: HashSet::new(),
            out: Vec::new(),
            capped: 0,
        }
    }

    pub fn run(&mut self, h: Heuristic, trigger: NodeId, stack: &[StackEntry]) {
        if h.uses(Heuristic::ParseTree) {
            self.parse_tree(trigger);
        }
        if h.uses(Heuristic::Stack) {
            self.stack(stack);
        }
        if h.uses(Heuristic::Line) {
            self.line(trigger);
        }
    }

    fn recreate(&mut self, leaf: NodeId) -> Option<Vec<u32>> {
        if let Some(s) = self.states.get(&leaf) {
            return s.clone();
        }
        let s = self.doc.recreate_states(self.root, leaf, self.vr);
        self.states.insert(leaf, s.clone());
        s
    }

    /// Proposes boxes of every embeddable language starting at `leaf`,
    /// given the outer states before it.
    fn propose(&mut self, leaf: NodeId, states: &[u32]) {
        if self.doc.kind(leaf) != Kind::Token {
            return;
        }
        let comp = self.doc.composition().clone();
        let outer = self.doc.lang_of(self.root);
        let t = &comp.langs[outer].tables;
        for &(lbox, lang) in &comp.embeds[outer] {
            if !t.shiftable_on(states, lbox) {
                continue;
            }
            let start = self.doc.offset_at(leaf, self.vr);
            let rec = self.recognised.entry((leaf, lang)).or_insert_with(|| {
                let src = Leaves::from_leaf(self.doc, leaf, self.doc.version());
                recognise(&comp, lang, src, start, self.cap)
            });
            if rec.capped {
                self.capped += 1;
                rec.capped = false;
            }
            for &end in &rec.ends {
                if self.seen.insert((start, end, lang)) {
                    self.out.push(Cand { start, end, lang, states: states.to_vec() });
                }
            }
        }
    }

    fn solid_from(&self, mut l: NodeId) -> Option<NodeId> {
        while self.doc.kind(l) == Kind::Token && self.doc.language(l).is_whitespace(self.doc.sym_at(l, self.vr)) {
            l = self.doc.next_leaf_at(l, self.vr)?;
        }
        Some(l)
    }

    /// Starts of the error node and of the subtrees enclosing it.
    fn parse_tree(&mut self, trigger: NodeId) {
        let v = self.vr;
        let mut n = Some(trigger);
        while let Some(p) = n {
            if self.doc.kind(p) == Kind::Root {
                break;
            }
            n = self.doc.parent_at(p, v);
            if self.doc.len_at(p, v) == 0 {
                continue;
            }
            let first = if self.doc.kind(p) == Kind::Token { Some(p) } else { self.doc.first_leaf_at(p, v) };
            let Some(first) = first.and_then(|l| self.solid_from(l)) else { continue };
            if let Some(states) = self.recreate(first) {
                self.propose(first, &states);
            }
        }
    }

    /// Positions after each entry of the stack the parser held at the error.
    fn stack(&mut self, stack: &[StackEntry]) {
        let solid: Vec<&StackEntry> = stack.iter().filter(|e| !e.transparent).collect();
        for i in (0..solid.len()).rev() {
            let states: Vec<u32> = solid[..=i].iter().map(|e| e.state).collect();
            let end = solid[i].end();
            let l = self.doc.leaf_at(self.root, end, self.vr);
            let l = if self.doc.offset_at(l, self.vr) < end {
                match self.doc.next_leaf_at(l, self.vr) {
                    Some(x) => x,
                    None => continue,
                }
            } else {
                l
            };
            if let Some(first) = self.solid_from(l) {
                self.propose(first, &states);
            }
        }
    }

    /// Tokens from the error back to the start of its line.
    fn line(&mut self, trigger: NodeId) {
        let v = self.vr;
        let mut l = trigger;
        loop {
            match self.doc.kind(l) {
                Kind::Bos => break,
                Kind::Token if self.doc.language(l).is_whitespace(self.doc.sym_at(l, v)) => {
                    if self.doc.text_at(l, v).contains('\n') {
                        break;
                    }
                }
                Kind::Token => {
                    if let Some(states) = self.recreate(l) {
                        self.propose(l, &states);
                    }
                }
                _ => {}
            }
            match self.doc.prev_leaf_at(l, v) {
                Some(p) => l = p,
                None => break,
            }
        }
    }
}
