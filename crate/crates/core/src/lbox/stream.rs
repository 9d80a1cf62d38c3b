//! Lazy text and token streams over a tree's leaves.

use crate::engine::{Document, Kind, NodeId};
use crate::grammar::{lalr, Language, Scan};

pub(crate) enum Fill {
    Text,
    Box(NodeId, usize),
    End,
}

/// Text of a tree from some offset on, read leaf by leaf at a version,
/// optionally preceded by an extra chunk.
pub(crate) struct Leaves<'d> {
    doc: &'d Document,
    v: u32,
    pre: Option<String>,
    next: Option<NodeId>,
    skip: usize,
}

impl<'d> Leaves<'d> {
    pub fn from_offset(doc: &'d Document, root: NodeId, off: usize, v: u32) -> Self {
        let l = doc.leaf_at(root, off, v);
        let skip = off - doc.offset_at(l, v).min(off);
        Leaves { doc, v, pre: None, next: Some(l), skip }
    }

    pub fn from_leaf(doc: &'d Document, leaf: NodeId, v: u32) -> Self {
        Leaves { doc, v, pre: None, next: Some(leaf), skip: 0 }
    }

    /// Only `text`, then end.
    pub fn only(doc: &'d Document, text: String) -> Self {
        Leaves { doc, v: doc.version(), pre: Some(text), next: None, skip: 0 }
    }

    pub fn with_prefix(mut self, text: String) -> Self {
        self.pre = Some(text);
        self
    }

    pub fn fill(&mut self, buf: &mut String) -> Fill {
        if let Some(p) = self.pre.take() {
            buf.push_str(&p);
            return Fill::Text;
        }
        loop {
            let Some(l) = self.next else { return Fill::End };
            match self.doc.kind(l) {
                Kind::Token => {
                    let t = &self.doc.text_at(l, self.v)[self.skip..];
                    self.skip = 0;
                    self.next = self.doc.next_leaf_at(l, self.v);
                    if !t.is_empty() {
                        buf.push_str(t);
                        return Fill::Text;
                    }
                }
                Kind::LBox => {
                    self.next = self.doc.next_leaf_at(l, self.v);
                    return Fill::Box(l, self.doc.len_at(l, self.v));
                }
                Kind::Bos => self.next = self.doc.next_leaf_at(l, self.v),
                _ => {
                    self.next = None;
                    return Fill::End;
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Tok {
    pub term: u32,
    pub start: usize,
    pub end: usize,
    /// The box this token stands for, if any.
    pub node: Option<NodeId>,
}

/// Non-whitespace tokens lexed on demand from a [`Leaves`] stream. Boxes
/// either end the stream or come through as single tokens of their box
/// terminal.
pub(crate) struct Tokens<'a> {
    lang: &'a Language,
    src: Leaves<'a>,
    buf: String,
    base: usize,
    pub pos: usize,
    pending_box: Option<(NodeId, usize)>,
    ended: bool,
    stop_at_box: bool,
}

impl<'a> Tokens<'a> {
    pub fn new(lang: &'a Language, src: Leaves<'a>, start: usize, stop_at_box: bool) -> Self {
        Tokens {
            lang,
            src,
            buf: String::new(),
            base: start,
            pos: start,
            pending_box: None,
            ended: false,
            stop_at_box,
        }
    }

    fn pull(&mut self) {
        match self.src.fill(&mut self.buf) {
            Fill::Text => {}
            Fill::Box(b, len) => self.pending_box = Some((b, len)),
            Fill::End => self.ended = true,
        }
    }

    fn next_any(&mut self) -> Option<Tok> {
        loop {
            if self.pos == self.base + self.buf.len() {
                if let Some((b, len)) = self.pending_box {
                    if self.stop_at_box {
                        return None;
                    }
                    self.pending_box = None;
                    let t = Tok { term: self.src.doc.sym(b), start: self.pos, end: self.pos + len, node: Some(b) };
                    self.pos += len;
                    self.buf.clear();
                    self.base = self.pos;
                    return Some(t);
                }
                if self.ended {
                    return None;
                }
                self.pull();
                continue;
            }
            let at_end = self.pending_box.is_some() || self.ended;
            let (term, len) = match self.lang.lexer.scan(self.buf.as_bytes(), self.pos - self.base, at_end) {
                Scan::NeedMore => {
                    self.pull();
                    continue;
                }
                Scan::Token { rule, len, .. } => (self.lang.rule_terminal(rule), len),
                Scan::Error { len, .. } => (lalr::ERROR, len),
            };
            let t = Tok { term, start: self.pos, end: self.pos + len, node: None };
            self.pos += len;
            if self.pos - self.base > 4096 {
                self.buf.drain(..self.pos - self.base);
                self.base = self.pos;
            }
            return Some(t);
        }
    }
}

impl Iterator for Tokens<'_> {
    type Item = Tok;

    fn next(&mut self) -> Option<Tok> {
        loop {
            let t = self.next_any()?;
            if t.node.is_some() || !self.lang.is_whitespace(t.term) {
                return Some(t);
            }
        }
    }
}
