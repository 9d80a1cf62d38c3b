//! Incremental LR parsing with subtree reuse and error isolation.

use super::doc::{flag, Document, Kind, NodeId};
use crate::grammar::{Action, LrTables};

/// One parse stack entry. Whitespace and skipped tokens are transparent:
/// they keep the state beneath them and are ignored when counting a
/// production's right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StackEntry {
    pub state: u32,
    pub node: NodeId,
    pub start: usize,
    pub len: usize,
    pub transparent: bool,
}

impl StackEntry {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

#[derive(Debug, Clone, Default)]
pub struct ParseOutcome {
    pub accepted: bool,
    /// Tokens this parse failed at, in order.
    pub errors: Vec<NodeId>,
    /// The stack at each error, parallel to `errors`.
    pub error_stacks: Vec<Vec<StackEntry>>,
    pub stack: Vec<StackEntry>,
    /// Clean subtrees shifted whole.
    pub reused: usize,
    /// Nonterminals built by reductions.
    pub reduced: usize,
}

struct Frame {
    parent: NodeId,
    idx: usize,
    start: usize,
}

impl Document {
    /// First non-whitespace terminal symbol under `n` at `v`.
    pub(crate) fn first_solid_sym_at(&self, n: NodeId, v: u32) -> Option<u32> {
        match self.kind(n) {
            Kind::Token if self.language(n).is_whitespace(self.sym_at(n, v)) => None,
            k if k.is_leaf() => Some(self.sym_at(n, v)),
            _ => self.children_at(n, v).iter().find_map(|&c| self.first_solid_sym_at(c, v)),
        }
    }

    pub(crate) fn reduce_entry(
        &mut self,
        stack: &mut Vec<StackEntry>,
        t: &LrTables,
        prod: u32,
        lang: usize,
        offset: usize,
    ) -> bool {
        let mut need = t.prod_len[prod as usize];
        let mut k = stack.len();
        while need > 0 {
            k -= 1;
            if !stack[k].transparent {
                need -= 1;
            }
        }
        let lhs = t.prod_lhs[prod as usize];
        let below = stack[k - 1].state;
        let Some(g) = t.goto(below, lhs) else { return false };
        let popped: Vec<StackEntry> = stack.drain(k..).collect();
        let node = self.new_node(Kind::Nonterm, lang, lhs, "");
        self.set_state_before(node, below);
        let start = popped.first().map_or(offset, |e| e.start);
        let len: usize = popped.iter().map(|e| e.len).sum();
        let mut has_error = false;
        for e in &popped {
            self.set_parent(e.node, node);
            has_error |= self.has(e.node, flag::ERROR | flag::HAS_ERROR);
        }
        self.set_children(node, popped.iter().map(|e| e.node).collect());
        self.set_len(node, len);
        if has_error {
            self.set_flag(node, flag::HAS_ERROR, true);
        }
        stack.push(StackEntry { state: g, node, start, len, transparent: false });
        true
    }

    /// Reparses the tree under `root` as a new version, reading the
    /// previous version's tree as input.
    pub fn parse(&mut self, root: NodeId) -> ParseOutcome {
        let vr = self.version();
        self.begin_version();
        let comp = self.composition().clone();
        let lang_idx = self.lang_of(root);
        let lang = &comp.langs[lang_idx];
        let t = &lang.tables;
        let bos = self.children_at(root, vr)[0];
        let mut stack = vec![StackEntry { state: 0, node: bos, start: 0, len: 0, transparent: false }];
        let mut frames = vec![Frame { parent: root, idx: 1, start: 0 }];
        let mut offset = 0usize;
        let mut out = ParseOutcome::default();
        loop {
            let f = frames.last().expect("root frame");
            let ch = self.children_at(f.parent, vr);
            if f.idx >= ch.len() {
                frames.pop();
                frames.last_mut().expect("EOS ends the root frame").idx += 1;
                continue;
            }
            let la = ch[f.idx];
            let kind = self.kind(la);
            if kind == Kind::Nonterm {
                let len = self.len_at(la, vr);
                if len == 0 {
                    frames.last_mut().unwrap().idx += 1;
                    continue;
                }
                if !self.has_at(la, flag::DIRTY | flag::ERRPATH, vr) {
                    if let Some(ft) = self.first_solid_sym_at(la, vr) {
                        while let Action::Reduce(p) = t.action(stack.last().unwrap().state, ft) {
                            if !self.reduce_entry(&mut stack, t, p, lang_idx, offset) {
                                break;
                            }
                            out.reduced += 1;
                        }
                        let top = stack.last().unwrap().state;
                        if top == self.state_before(la) {
                            if let Some(g) = t.goto(top, self.sym_at(la, vr)) {
                                stack.push(StackEntry { state: g, node: la, start: offset, len, transparent: false });
                                offset += len;
                                frames.last_mut().unwrap().idx += 1;
                                out.reused += 1;
                                continue;
                            }
                        }
                    }
                }
                frames.push(Frame { parent: la, idx: 0, start: offset });
                continue;
            }
            let term = self.sym_at(la, vr);
            let len = self.len_at(la, vr);
            if kind == Kind::Token && lang.is_whitespace(term) {
                let state = stack.last().unwrap().state;
                stack.push(StackEntry { state, node: la, start: offset, len, transparent: true });
                self.set_flag(la, flag::ERROR | flag::DIRTY, false);
                offset += len;
                frames.last_mut().unwrap().idx += 1;
                continue;
            }
            loop {
                let top = stack.last().unwrap().state;
                match t.action(top, term) {
                    Action::Reduce(p) => {
                        if self.reduce_entry(&mut stack, t, p, lang_idx, offset) {
                            out.reduced += 1;
                            continue;
                        }
                    }
                    Action::Shift(s) => {
                        stack.push(StackEntry { state: s, node: la, start: offset, len, transparent: false });
                        self.set_flag(la, flag::ERROR | flag::DIRTY, false);
                        offset += len;
                        frames.last_mut().unwrap().idx += 1;
                        break;
                    }
                    Action::Accept => {
                        self.finalize(root, &stack, true, &mut out);
                        return out;
                    }
                    Action::Error => {}
                }
                // Syntax error at `la`.
                self.set_flag(la, flag::ERROR, true);
                out.errors.push(la);
                out.error_stacks.push(stack.clone());
                if kind == Kind::Eos {
                    self.finalize(root, &stack, false, &mut out);
                    return out;
                }
                if let Some(m) = self.isolate(&mut stack, &frames, t, la, offset, vr) {
                    frames.truncate(m);
                    let top = stack.last().unwrap();
                    offset = top.end();
                    frames.last_mut().unwrap().idx += 1;
                } else {
                    let state = stack.last().unwrap().state;
                    stack.push(StackEntry { state, node: la, start: offset, len, transparent: true });
                    self.set_flag(la, flag::DIRTY, false);
                    offset += len;
                    frames.last_mut().unwrap().idx += 1;
                }
                break;
            }
        }
    }

    /// Tries to isolate the error at `la` inside the smallest enclosing old
    /// subtree that can be shifted whole onto the stack below it. Returns
    /// the frame depth of that subtree.
    fn isolate(
        &mut self,
        stack: &mut Vec<StackEntry>,
        frames: &[Frame],
        t: &LrTables,
        la: NodeId,
        la_off: usize,
        vr: u32,
    ) -> Option<usize> {
        for m in (1..frames.len()).rev() {
            let a = frames[m].parent;
            let a_start = frames[m].start;
            let mut k = stack.len();
            while k > 1 && (stack[k - 1].start > a_start || (stack[k - 1].start == a_start && stack[k - 1].len > 0)) {
                k -= 1;
            }
            // Zero-width entries at the boundary may belong to either side.
            loop {
                let below = stack[k - 1];
                if below.end() == a_start && below.state == self.state_before(a) {
                    if let Some(g) = t.goto(below.state, self.sym_at(a, vr)) {
                        stack.truncate(k);
                        let len = self.len_at(a, vr);
                        self.restore_span(a, a_start, la_off, vr);
                        let mut y = la;
                        while let Some(p) = self.parent_at(y, vr).filter(|&p| p != a) {
                            self.set_flag(p, flag::HAS_ERROR | flag::ERRPATH, true);
                            y = p;
                        }
                        self.set_flag(a, flag::HAS_ERROR, true);
                        self.set_flag(a, flag::DIRTY, false);
                        stack.push(StackEntry { state: g, node: a, start: a_start, len, transparent: false });
                        return Some(m);
                    }
                }
                if k > 1 && stack[k - 1].start == a_start && stack[k - 1].len == 0 {
                    k -= 1;
                } else {
                    break;
                }
            }
        }
        None
    }

    /// Puts back the old links, damage and error marks of `a`'s subtree up to
    /// offset `limit`, undoing this parse's work inside it.
    fn restore_span(&mut self, a: NodeId, a_start: usize, limit: usize, vr: u32) {
        let mut pos = a_start;
        let ch = self.children_at(a, vr).to_vec();
        for c in ch {
            if pos > limit {
                break;
            }
            self.set_parent(c, a);
            let dirty = self.has_at(c, flag::DIRTY, vr);
            self.set_flag(c, flag::DIRTY, dirty);
            if self.has_at(c, flag::ERROR, vr) {
                self.set_flag(c, flag::ERROR, true);
            }
            if self.kind(c) == Kind::Nonterm {
                self.restore_span(c, pos, limit, vr);
            }
            pos += self.len_at(c, vr);
        }
    }

    fn finalize(&mut self, root: NodeId, stack: &[StackEntry], accept: bool, out: &mut ParseOutcome) {
        let ch = self.children(root);
        let (bos, eos) = (ch[0], *ch.last().unwrap());
        let mut children = Vec::with_capacity(stack.len() + 1);
        children.push(bos);
        let mut has_error = false;
        for e in &stack[1..] {
            children.push(e.node);
            has_error |= self.has(e.node, flag::ERROR | flag::HAS_ERROR);
        }
        children.push(eos);
        for &c in &children {
            self.set_parent(c, root);
        }
        self.set_children(root, children);
        let accepted = accept && !has_error;
        if accept {
            self.set_flag(eos, flag::ERROR, false);
        }
        self.set_flag(eos, flag::DIRTY, false);
        self.set_flag(root, flag::DIRTY, false);
        self.set_flag(root, flag::ACCEPTED, accepted);
        self.set_flag(root, flag::HAS_ERROR, !accepted);
        out.accepted = accepted;
        out.stack = stack.to_vec();
    }
}
