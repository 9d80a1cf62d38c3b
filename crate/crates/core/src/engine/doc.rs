//! The document: an arena of versioned nodes holding the outer tree and
//! the inner tree of every language box.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::hist::Hist;
use crate::grammar::{lalr, Composition, Language};

pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Root,
    Bos,
    Eos,
    Token,
    Nonterm,
    LBox,
}

impl Kind {
    #[inline]
    pub fn is_leaf(self) -> bool {
        !matches!(self, Kind::Root | Kind::Nonterm)
    }
}

pub mod flag {
    pub const ERROR: u8 = 1;
    pub const HAS_ERROR: u8 = 2;
    pub const DIRTY: u8 = 4;
    pub const COMMITTED: u8 = 8;
    pub const ACCEPTED: u8 = 16;
    /// On the path from an error token up to the subtree isolating it.
    pub const ERRPATH: u8 = 32;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Automatic,
    Manual,
}

#[derive(Debug, Clone)]
pub struct BoxData {
    /// Root of the inner tree.
    pub inner: NodeId,
    /// Inner language index.
    pub lang: usize,
    pub origin: Origin,
    /// Error node whose consideration produced the box.
    pub trigger: Option<NodeId>,
}

#[derive(Debug, Clone)]
pub(super) struct Node {
    pub kind: Kind,
    /// Language of the tree the node belongs to.
    pub lang: u16,
    pub created: u32,
    /// Last version this node was logged at.
    pub logged: u32,
    pub state_before: u32,
    pub noinsert: bool,
    pub ever_flagged: bool,
    pub sym: Hist<u32>,
    pub text: Hist<Box<str>>,
    pub la: Hist<u32>,
    pub children: Hist<Vec<NodeId>>,
    pub parent: Hist<NodeId>,
    pub len: Hist<u32>,
    pub flags: Hist<u8>,
}

const NO_PARENT: NodeId = NodeId::MAX;
const NO_STATE: u32 = u32::MAX;

pub struct Document {
    comp: Arc<Composition>,
    pub(super) nodes: Vec<Node>,
    version: u32,
    /// Nodes written at each version.
    log: Vec<Vec<NodeId>>,
    root: NodeId,
    boxes: HashMap<NodeId, BoxData>,
    owners: HashMap<NodeId, NodeId>,
    box_order: Vec<NodeId>,
    flagged: Vec<NodeId>,
    /// Largest lexer lookahead ever recorded in each tree.
    pub(super) max_la: HashMap<NodeId, usize>,
}

impl Document {
    /// A document in the composition's outer language holding `text`,
    /// lexed and parsed.
    pub fn new(comp: Arc<Composition>, text: &str) -> Document {
        let mut doc = Document {
            comp,
            nodes: Vec::new(),
            version: 0,
            log: vec![Vec::new()],
            root: 0,
            boxes: HashMap::new(),
            owners: HashMap::new(),
            box_order: Vec::new(),
            flagged: Vec::new(),
            max_la: HashMap::new(),
        };
        doc.root = doc.new_tree(0);
        if !text.is_empty() {
            doc.splice(doc.root, 0, 0, vec![super::Atom::Text(text.to_string())]);
        }
        doc.parse(doc.root);
        doc
    }

    pub fn composition(&self) -> &Arc<Composition> {
        &self.comp
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub(crate) fn begin_version(&mut self) -> u32 {
        self.version += 1;
        self.log.push(Vec::new());
        self.version
    }

    /// Creates an empty tree (Root, BOS, EOS) of language `lang`.
    pub(crate) fn new_tree(&mut self, lang: usize) -> NodeId {
        let root = self.new_node(Kind::Root, lang, u32::MAX, "");
        let bos = self.new_node(Kind::Bos, lang, u32::MAX, "");
        let eos = self.new_node(Kind::Eos, lang, lalr::EOS, "");
        self.set_children(root, vec![bos, eos]);
        self.set_parent(bos, root);
        self.set_parent(eos, root);
        root
    }

    pub(crate) fn new_node(&mut self, kind: Kind, lang: usize, sym: u32, text: &str) -> NodeId {
        let v = self.version;
        let id = self.nodes.len() as NodeId;
        self.nodes.push(Node {
            kind,
            lang: lang as u16,
            created: v,
            logged: v,
            state_before: NO_STATE,
            noinsert: false,
            ever_flagged: false,
            sym: Hist::new(v, sym),
            text: if kind == Kind::Token { Hist::new(v, text.into()) } else { Hist::default() },
            la: if kind == Kind::Token { Hist::new(v, 1) } else { Hist::default() },
            children: if matches!(kind, Kind::Root | Kind::Nonterm) {
                Hist::new(v, Vec::new())
            } else {
                Hist::default()
            },
            parent: Hist::new(v, NO_PARENT),
            len: Hist::new(v, text.len() as u32),
            flags: Hist::new(v, 0),
        });
        self.log[v as usize].push(id);
        id
    }

    fn touch(&mut self, n: NodeId) {
        let v = self.version;
        let node = &mut self.nodes[n as usize];
        if node.logged != v {
            node.logged = v;
            self.log[v as usize].push(n);
        }
    }

    // ---- reads ----

    #[inline]
    pub fn kind(&self, n: NodeId) -> Kind {
        self.nodes[n as usize].kind
    }

    #[inline]
    pub fn lang_of(&self, n: NodeId) -> usize {
        self.nodes[n as usize].lang as usize
    }

    pub fn language(&self, n: NodeId) -> &Language {
        &self.comp.langs[self.lang_of(n)]
    }

    pub fn created(&self, n: NodeId) -> u32 {
        self.nodes[n as usize].created
    }

    pub fn state_before(&self, n: NodeId) -> u32 {
        self.nodes[n as usize].state_before
    }

    pub fn noinsert(&self, n: NodeId) -> bool {
        self.nodes[n as usize].noinsert
    }

    pub fn set_noinsert(&mut self, n: NodeId) {
        self.nodes[n as usize].noinsert = true;
    }

    #[inline]
    pub fn sym(&self, n: NodeId) -> u32 {
        self.sym_at(n, self.version)
    }

    #[inline]
    pub fn sym_at(&self, n: NodeId, v: u32) -> u32 {
        *self.nodes[n as usize].sym.at(v).unwrap_or(&u32::MAX)
    }

    pub fn sym_name(&self, n: NodeId) -> String {
        let lang = self.language(n);
        match self.kind(n) {
            Kind::Nonterm => lang.grammar.nonterminals[self.sym(n) as usize].clone(),
            Kind::Root => "Root".into(),
            Kind::Bos => "BOS".into(),
            _ => lang.terminal_name(self.sym(n)).to_string(),
        }
    }

    #[inline]
    pub fn text(&self, n: NodeId) -> &str {
        self.text_at(n, self.version)
    }

    pub fn text_at(&self, n: NodeId, v: u32) -> &str {
        self.nodes[n as usize].text.at(v).map_or("", |s| s)
    }

    pub fn la(&self, n: NodeId) -> usize {
        self.la_at(n, self.version)
    }

    pub fn la_at(&self, n: NodeId, v: u32) -> usize {
        self.nodes[n as usize].la.at(v).copied().unwrap_or(0) as usize
    }

    #[inline]
    pub fn children(&self, n: NodeId) -> &[NodeId] {
        self.children_at(n, self.version)
    }

    #[inline]
    pub fn children_at(&self, n: NodeId, v: u32) -> &[NodeId] {
        self.nodes[n as usize].children.at(v).map_or(&[], |c| c.as_slice())
    }

    #[inline]
    pub fn parent(&self, n: NodeId) -> Option<NodeId> {
        self.parent_at(n, self.version)
    }

    #[inline]
    pub fn parent_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        self.nodes[n as usize].parent.at(v).copied().filter(|&p| p != NO_PARENT)
    }

    #[inline]
    pub fn len(&self, n: NodeId) -> usize {
        self.len_at(n, self.version)
    }

    #[inline]
    pub fn len_at(&self, n: NodeId, v: u32) -> usize {
        self.nodes[n as usize].len.at(v).copied().unwrap_or(0) as usize
    }

    #[inline]
    pub fn has(&self, n: NodeId, bit: u8) -> bool {
        self.has_at(n, bit, self.version)
    }

    #[inline]
    pub fn has_at(&self, n: NodeId, bit: u8, v: u32) -> bool {
        self.nodes[n as usize].flags.at(v).is_some_and(|f| f & bit != 0)
    }

    pub fn is_error(&self, n: NodeId) -> bool {
        self.has(n, flag::ERROR)
    }

    /// Whether `n` lies in the live document: linked from the outer root
    /// through consistent parent/children pairs, crossing box boundaries.
    pub fn is_live(&self, n: NodeId) -> bool {
        let mut x = n;
        loop {
            match self.parent(x) {
                Some(p) => {
                    if !self.children(p).contains(&x) {
                        return false;
                    }
                    x = p;
                }
                None => {
                    if x == self.root {
                        return true;
                    }
                    match self.owners.get(&x) {
                        Some(&b) if self.kind(x) == Kind::Root => x = b,
                        _ => return false,
                    }
                }
            }
        }
    }

    // ---- writes (always at the current version) ----

    pub(crate) fn set_sym(&mut self, n: NodeId, s: u32) {
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].sym.set(v, s);
    }

    pub(crate) fn set_text(&mut self, n: NodeId, t: &str) {
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].text.set(v, t.into());
    }

    pub(crate) fn set_la(&mut self, n: NodeId, la: usize) {
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].la.set(v, la as u32);
    }

    pub(crate) fn set_children(&mut self, n: NodeId, c: Vec<NodeId>) {
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].children.set(v, c);
    }

    pub(crate) fn set_parent(&mut self, n: NodeId, p: NodeId) {
        if self.nodes[n as usize].parent.latest() == Some(&p) {
            return;
        }
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].parent.set(v, p);
    }

    pub(crate) fn detach(&mut self, n: NodeId) {
        self.set_parent(n, NO_PARENT);
    }

    pub(crate) fn set_len(&mut self, n: NodeId, len: usize) {
        if self.len(n) == len {
            return;
        }
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].len.set(v, len as u32);
    }

    pub(crate) fn set_flag(&mut self, n: NodeId, bit: u8, on: bool) {
        let cur = self.nodes[n as usize].flags.latest().copied().unwrap_or(0);
        let new = if on { cur | bit } else { cur & !bit };
        if new == cur {
            return;
        }
        if on && bit == flag::ERROR && !self.nodes[n as usize].ever_flagged {
            self.nodes[n as usize].ever_flagged = true;
            self.flagged.push(n);
        }
        self.touch(n);
        let v = self.version;
        self.nodes[n as usize].flags.set(v, new);
    }

    pub(crate) fn set_state_before(&mut self, n: NodeId, s: u32) {
        self.nodes[n as usize].state_before = s;
    }

    // ---- navigation ----

    pub fn index_in_parent_at(&self, n: NodeId, v: u32) -> Option<(NodeId, usize)> {
        let p = self.parent_at(n, v)?;
        let i = self.children_at(p, v).iter().position(|&c| c == n)?;
        Some((p, i))
    }

    /// First leaf of `n`'s subtree at `v`; empty nonterminals have none.
    pub fn first_leaf_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        if self.kind(n).is_leaf() {
            return Some(n);
        }
        self.children_at(n, v).iter().find_map(|&c| self.first_leaf_at(c, v))
    }

    pub fn last_leaf_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        if self.kind(n).is_leaf() {
            return Some(n);
        }
        self.children_at(n, v).iter().rev().find_map(|&c| self.last_leaf_at(c, v))
    }

    /// Next terminal (token, box or sentinel) in document order at `v`.
    pub fn next_leaf_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        let mut x = n;
        loop {
            let (p, i) = self.index_in_parent_at(x, v)?;
            if let Some(l) = self.children_at(p, v)[i + 1..].iter().find_map(|&c| self.first_leaf_at(c, v)) {
                return Some(l);
            }
            x = p;
        }
    }

    pub fn prev_leaf_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        let mut x = n;
        loop {
            let (p, i) = self.index_in_parent_at(x, v)?;
            if let Some(l) = self.children_at(p, v)[..i].iter().rev().find_map(|&c| self.last_leaf_at(c, v)) {
                return Some(l);
            }
            x = p;
        }
    }

    pub fn next_terminal(&self, n: NodeId) -> Option<NodeId> {
        self.next_leaf_at(n, self.version)
    }

    pub fn prev_terminal(&self, n: NodeId) -> Option<NodeId> {
        self.prev_leaf_at(n, self.version)
    }

    /// Preorder successor at `v`.
    pub fn next_lookahead_at(&self, n: NodeId, v: u32) -> Option<NodeId> {
        if let Some(&c) = self.children_at(n, v).first() {
            return Some(c);
        }
        let mut x = n;
        loop {
            let (p, i) = self.index_in_parent_at(x, v)?;
            if let Some(&s) = self.children_at(p, v).get(i + 1) {
                return Some(s);
            }
            x = p;
        }
    }

    /// Byte offset of `n` within its tree at `v`.
    pub fn offset_at(&self, n: NodeId, v: u32) -> usize {
        let mut off = 0;
        let mut x = n;
        while let Some(p) = self.parent_at(x, v) {
            for &c in self.children_at(p, v) {
                if c == x {
                    break;
                }
                off += self.len_at(c, v);
            }
            x = p;
        }
        off
    }

    pub fn offset(&self, n: NodeId) -> usize {
        self.offset_at(n, self.version)
    }

    pub fn tree_root_at(&self, n: NodeId, v: u32) -> NodeId {
        let mut x = n;
        while let Some(p) = self.parent_at(x, v) {
            x = p;
        }
        x
    }

    pub fn tree_root(&self, n: NodeId) -> NodeId {
        self.tree_root_at(n, self.version)
    }

    /// Leaf covering `off` (start <= off < end) in the tree under `root`,
    /// or its EOS when `off` is the tree length.
    pub fn leaf_at(&self, root: NodeId, off: usize, v: u32) -> NodeId {
        let mut n = root;
        let mut base = 0;
        loop {
            if self.kind(n).is_leaf() {
                return n;
            }
            let mut next = None;
            for &c in self.children_at(n, v) {
                let l = self.len_at(c, v);
                if off < base + l {
                    next = Some(c);
                    break;
                }
                base += l;
            }
            match next {
                Some(c) => n = c,
                None => return *self.children_at(root, v).last().expect("tree without EOS"),
            }
        }
    }

    /// First leaf at or after `off` that is not whitespace.
    pub fn first_solid_leaf_from(&self, root: NodeId, off: usize) -> NodeId {
        let v = self.version;
        let mut l = self.leaf_at(root, off, v);
        if self.offset(l) < off {
            l = self.next_terminal(l).expect("EOS is last");
        }
        while self.is_whitespace_leaf(l) {
            l = self.next_terminal(l).expect("EOS is last");
        }
        l
    }

    pub fn is_whitespace_leaf(&self, n: NodeId) -> bool {
        self.kind(n) == Kind::Token && self.language(n).is_whitespace(self.sym(n))
    }

    pub fn bos(&self, root: NodeId) -> NodeId {
        self.children(root)[0]
    }

    pub fn eos(&self, root: NodeId) -> NodeId {
        *self.children(root).last().expect("tree without EOS")
    }

    // ---- text ----

    /// Text of the subtree at the current version, box contents included.
    pub fn subtree_text(&self, n: NodeId) -> String {
        let mut out = String::new();
        self.push_text(n, &mut out);
        out
    }

    fn push_text(&self, n: NodeId, out: &mut String) {
        match self.kind(n) {
            Kind::Token => out.push_str(self.text(n)),
            Kind::LBox => self.push_text(self.boxes[&n].inner, out),
            Kind::Bos | Kind::Eos => {}
            Kind::Root | Kind::Nonterm => {
                for &c in self.children(n) {
                    self.push_text(c, out);
                }
            }
        }
    }

    pub fn text_all(&self) -> String {
        self.subtree_text(self.root)
    }

    /// Tokens in document order at the current version (boxes as leaves).
    pub fn leaves(&self, root: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            if self.kind(n).is_leaf() {
                out.push(n);
            } else {
                stack.extend(self.children(n).iter().rev());
            }
        }
        out
    }

    // ---- boxes ----

    pub(crate) fn register_box(&mut self, b: NodeId, data: BoxData) {
        self.owners.insert(data.inner, b);
        self.boxes.insert(b, data);
        self.box_order.push(b);
    }

    pub fn box_data(&self, b: NodeId) -> &BoxData {
        &self.boxes[&b]
    }

    pub fn owner_of(&self, root: NodeId) -> Option<NodeId> {
        self.owners.get(&root).copied()
    }

    /// Offset of `n` in the whole document.
    pub fn global_offset(&self, n: NodeId) -> usize {
        let v = self.version;
        let mut off = self.offset_at(n, v);
        let mut root = self.tree_root_at(n, v);
        while let Some(b) = self.owner_of(root) {
            off += self.offset_at(b, v);
            root = self.tree_root_at(b, v);
        }
        off
    }

    /// Live boxes ordered by their global start (outer before nested).
    pub fn live_boxes(&self) -> Vec<NodeId> {
        let mut out: Vec<(usize, usize, NodeId)> = self
            .box_order
            .iter()
            .filter(|&&b| self.is_live(b))
            .map(|&b| (self.global_offset(b), self.depth_of_tree(b), b))
            .collect();
        out.sort();
        out.into_iter().map(|(_, _, b)| b).collect()
    }

    fn depth_of_tree(&self, n: NodeId) -> usize {
        let mut d = 0;
        let mut root = self.tree_root(n);
        while let Some(b) = self.owner_of(root) {
            d += 1;
            root = self.tree_root(b);
        }
        d
    }

    /// Live tree roots: the outer root then each live box's inner root.
    pub fn live_roots(&self) -> Vec<NodeId> {
        let mut out = vec![self.root];
        out.extend(self.live_boxes().into_iter().map(|b| self.boxes[&b].inner));
        out
    }

    /// Tokens currently marked as errors in the live document, in
    /// document order.
    pub fn error_nodes(&self) -> Vec<NodeId> {
        let mut out: Vec<(usize, NodeId)> = self
            .flagged
            .iter()
            .filter(|&&n| self.is_error(n) && self.is_live(n))
            .map(|&n| (self.global_offset(n), n))
            .collect();
        out.sort();
        out.into_iter().map(|(_, n)| n).collect()
    }

    /// Checks link consistency, lengths and sentinels of every live tree.
    pub fn validate(&self) -> Result<(), String> {
        for root in self.live_roots() {
            let ch = self.children(root);
            if ch.len() < 2 || self.kind(ch[0]) != Kind::Bos || self.kind(*ch.last().unwrap()) != Kind::Eos {
                return Err(format!("tree {root} lacks sentinels"));
            }
            self.validate_node(root)?;
            if let Some(b) = self.owner_of(root) {
                if self.len(b) != self.len(root) {
                    return Err(format!("box {b} length {} != inner {}", self.len(b), self.len(root)));
                }
            }
        }
        Ok(())
    }

    fn validate_node(&self, n: NodeId) -> Result<usize, String> {
        match self.kind(n) {
            Kind::Token => {
                if self.len(n) != self.text(n).len() {
                    return Err(format!("token {n} length mismatch"));
                }
                Ok(self.len(n))
            }
            k if k.is_leaf() => Ok(self.len(n)),
            _ => {
                let mut total = 0;
                for &c in self.children(n) {
                    if self.parent(c) != Some(n) {
                        return Err(format!("child {c} of {n} has parent {:?}", self.parent(c)));
                    }
                    total += self.validate_node(c)?;
                }
                if total != self.len(n) {
                    return Err(format!("node {n} length {} != {total}", self.len(n)));
                }
                Ok(total)
            }
        }
    }

    // ---- undo ----

    /// Restores every node written after `vb` to its value at `vb`, as a
    /// new version. Nodes created after `vb` simply become unreachable.
    pub fn revert_to(&mut self, vb: u32) -> u32 {
        let cur = self.version;
        let mut seen = HashSet::new();
        let mut touched = Vec::new();
        for v in vb + 1..=cur {
            for &n in &self.log[v as usize] {
                if self.nodes[n as usize].created <= vb && seen.insert(n) {
                    touched.push(n);
                }
            }
        }
        let nv = self.begin_version();
        for n in touched {
            self.touch(n);
            let node = &mut self.nodes[n as usize];
            macro_rules! restore {
                ($f:ident) => {
                    if let Some(x) = node.$f.at(vb).cloned() {
                        node.$f.set(nv, x);
                    }
                };
            }
            restore!(sym);
            restore!(text);
            restore!(la);
            restore!(children);
            restore!(parent);
            restore!(len);
            restore!(flags);
        }
        nv
    }
}
