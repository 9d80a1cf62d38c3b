//! Incremental relexing of a spliced region.

use std::collections::{HashMap, HashSet, VecDeque};

use super::doc::{flag, Document, Kind, NodeId};
use crate::grammar::{lalr, Scan};

/// Replacement content for a splice.
#[derive(Debug, Clone)]
pub enum Atom {
    Text(String),
    Box(NodeId),
}

enum Piece {
    Text(String),
    NewBox(NodeId),
    OldTok(NodeId, usize, String),
    OldBox(usize),
    Eos,
}

enum NewLeaf {
    Tok { start: usize, term: u32, text: String, la: usize },
    Box(NodeId),
}

struct Source {
    front: VecDeque<Piece>,
    walker: Option<NodeId>,
    wpos: usize,
}

impl Document {
    fn fill(&self, src: &mut Source, rv: u32) {
        if !src.front.is_empty() {
            return;
        }
        let Some(l) = src.walker else {
            src.front.push_back(Piece::Eos);
            return;
        };
        let os = src.wpos;
        let piece = match self.kind(l) {
            Kind::Token => Piece::OldTok(l, os, self.text_at(l, rv).to_string()),
            Kind::LBox => Piece::OldBox(os),
            _ => Piece::Eos,
        };
        src.wpos += self.len_at(l, rv);
        src.walker = if matches!(piece, Piece::Eos) { None } else { self.next_leaf_at(l, rv) };
        src.front.push_back(piece);
    }

    /// Replaces bytes `start..end` of the tree under `root` with `atoms` and
    /// relexes around the change as a new version. Returns the leaves that
    /// were created or relexed.
    pub fn splice(&mut self, root: NodeId, start: usize, end: usize, atoms: Vec<Atom>) -> Vec<NodeId> {
        let rv = self.version();
        assert!(start <= end && end <= self.len_at(root, rv), "splice out of range");
        let lang_idx = self.lang_of(root);
        let comp = self.composition().clone();
        let lang = &comp.langs[lang_idx];

        // Walk back over tokens whose examined text reaches the edit. No
        // token ending more than `reach` bytes before it can.
        let reach = self.max_la.get(&root).copied().unwrap_or(1);
        let mut first_old = None;
        let mut first_start = start;
        if start > 0 {
            let mut l = self.leaf_at(root, start - 1, rv);
            let mut ls = self.offset_at(l, rv);
            while self.kind(l) == Kind::Token && ls + self.len_at(l, rv) + reach > start {
                if ls + self.len_at(l, rv) + self.la_at(l, rv) > start {
                    first_old = Some(l);
                    first_start = ls;
                }
                match self.prev_leaf_at(l, rv) {
                    Some(p) => {
                        ls -= self.len_at(p, rv);
                        l = p;
                    }
                    None => break,
                }
            }
        }
        let first = first_old.unwrap_or_else(|| self.leaf_at(root, start, rv));
        let pred = self.prev_leaf_at(first, rv).expect("BOS precedes every leaf");

        // Old leaves overlapping the edit, and the text around it.
        let mut consumed: Vec<(NodeId, usize)> = Vec::new();
        let mut prefix = String::new();
        let mut tail = String::new();
        let mut walker = Some(first);
        let mut wpos = first_start;
        while let Some(l) = walker {
            let k = self.kind(l);
            if k == Kind::Eos || wpos >= end {
                break;
            }
            let len = self.len_at(l, rv);
            let (ls, le) = (wpos, wpos + len);
            consumed.push((l, ls));
            if k == Kind::Token {
                let text = self.text_at(l, rv);
                if ls < start {
                    prefix.push_str(&text[..le.min(start) - ls]);
                }
                if le > end {
                    tail.push_str(&text[end - ls..]);
                }
            } else {
                assert!(ls >= start && le <= end, "splice cuts through a language box");
            }
            walker = self.next_leaf_at(l, rv);
            wpos = le;
        }

        let mut ins_len = 0;
        let mut front = VecDeque::new();
        front.push_back(Piece::Text(prefix));
        for a in atoms {
            match a {
                Atom::Text(t) => {
                    ins_len += t.len();
                    front.push_back(Piece::Text(t));
                }
                Atom::Box(b) => {
                    ins_len += self.len(b);
                    front.push_back(Piece::NewBox(b));
                }
            }
        }
        front.push_back(Piece::Text(tail));
        let delta = ins_len as isize - (end - start) as isize;
        let ins_end = start + ins_len;
        let mut src = Source { front, walker, wpos };

        // Lex until the new token stream lines up with an old token.
        let mut out: Vec<NewLeaf> = Vec::new();
        let mut pulled: Vec<(NodeId, usize)> = Vec::new();
        let mut synced = 0usize;
        let mut buf = String::new();
        let mut buf_start = first_start;
        let mut pos = first_start;
        let mapped = |os: usize| (os as isize + delta) as usize;
        'lex: loop {
            if pos == buf_start + buf.len() {
                self.fill(&mut src, rv);
                match src.front.pop_front().expect("filled") {
                    Piece::Text(t) => buf.push_str(&t),
                    Piece::OldTok(id, os, t) => {
                        if pos >= ins_end && mapped(os) == pos {
                            synced = pulled.len();
                            break 'lex;
                        }
                        pulled.push((id, os));
                        buf.push_str(&t);
                    }
                    Piece::NewBox(b) => {
                        out.push(NewLeaf::Box(b));
                        pos += self.len(b);
                        buf.clear();
                        buf_start = pos;
                    }
                    Piece::OldBox(os) => {
                        debug_assert!(pos >= ins_end && mapped(os) == pos);
                        synced = pulled.len();
                        break 'lex;
                    }
                    Piece::Eos => {
                        synced = pulled.len();
                        break 'lex;
                    }
                }
                continue;
            }
            self.fill(&mut src, rv);
            let at_end = matches!(src.front[0], Piece::NewBox(_) | Piece::OldBox(_) | Piece::Eos);
            let (term, len, la) = match lang.lexer.scan(buf.as_bytes(), pos - buf_start, at_end) {
                Scan::NeedMore => {
                    match src.front.pop_front().expect("filled") {
                        Piece::Text(t) => buf.push_str(&t),
                        Piece::OldTok(id, os, t) => {
                            pulled.push((id, os));
                            buf.push_str(&t);
                        }
                        _ => unreachable!("boundary pieces end the run"),
                    }
                    continue;
                }
                Scan::Token { rule, len, lookahead } => (lang.rule_terminal(rule), len, lookahead),
                Scan::Error { len, lookahead } => (lalr::ERROR, len, lookahead),
            };
            let b = pos - buf_start;
            let m = self.max_la.entry(root).or_insert(1);
            *m = (*m).max(la);
            out.push(NewLeaf::Tok { start: pos, term, text: buf[b..b + len].to_string(), la });
            pos += len;
            if pos >= ins_end {
                while synced < pulled.len() && mapped(pulled[synced].1) < pos {
                    synced += 1;
                }
                if synced < pulled.len() && mapped(pulled[synced].1) == pos {
                    break 'lex;
                }
            }
        }
        consumed.extend_from_slice(&pulled[..synced]);

        // Apply: reuse tokens starting at the same place, drop the rest.
        self.begin_version();
        let mut by_start: HashMap<usize, NodeId> = HashMap::new();
        for &(id, os) in &consumed {
            if self.kind(id) != Kind::Token {
                continue;
            }
            let ns = if os < start {
                os
            } else if os >= end {
                mapped(os)
            } else {
                continue;
            };
            by_start.insert(ns, id);
        }
        let mut seq: Vec<(NodeId, bool)> = Vec::with_capacity(out.len());
        for leaf in out {
            match leaf {
                NewLeaf::Tok { start: s, term, text, la } => match by_start.remove(&s) {
                    Some(old) => {
                        if self.sym(old) != term {
                            self.set_sym(old, term);
                        }
                        if self.text(old) != text {
                            self.set_text(old, &text);
                            self.set_len(old, text.len());
                        }
                        if self.la(old) != la {
                            self.set_la(old, la);
                        }
                        self.set_flag(old, flag::ERROR, false);
                        seq.push((old, false));
                    }
                    None => {
                        let n = self.new_node(Kind::Token, lang_idx, term, &text);
                        self.set_la(n, la);
                        seq.push((n, true));
                    }
                },
                NewLeaf::Box(b) => seq.push((b, true)),
            }
        }
        let kept: HashSet<NodeId> = seq.iter().map(|&(n, _)| n).collect();
        let mut marked: Vec<NodeId> = Vec::new();
        let mut by_parent: Vec<(NodeId, Vec<NodeId>)> = Vec::new();
        for &(id, _) in &consumed {
            if kept.contains(&id) {
                continue;
            }
            let p = self.parent(id).expect("consumed leaf is attached");
            match by_parent.iter_mut().find(|(q, _)| *q == p) {
                Some((_, v)) => v.push(id),
                None => by_parent.push((p, vec![id])),
            }
        }
        for (p, gone) in by_parent {
            let ch: Vec<NodeId> = self.children(p).iter().copied().filter(|c| !gone.contains(c)).collect();
            self.set_children(p, ch);
            for g in gone {
                self.detach(g);
            }
            marked.push(p);
        }
        let mut anchor = pred;
        let mut i = 0;
        while i < seq.len() {
            let (n, fresh) = seq[i];
            if !fresh {
                anchor = n;
                i += 1;
                continue;
            }
            let mut run = Vec::new();
            while i < seq.len() && seq[i].1 {
                run.push(seq[i].0);
                i += 1;
            }
            let (p, idx) = self.index_in_parent_at(anchor, self.version()).expect("anchor is attached");
            let mut ch = self.children(p).to_vec();
            ch.splice(idx + 1..idx + 1, run.iter().copied());
            self.set_children(p, ch);
            for &r in &run {
                self.set_parent(r, p);
            }
            anchor = *run.last().expect("non-empty run");
        }

        // Damage: relexed leaves, parents of removed ones, and the leaves
        // before the region up to the last non-whitespace one.
        marked.extend(seq.iter().map(|&(n, _)| n));
        let mut p = pred;
        loop {
            marked.push(p);
            if !self.is_whitespace_leaf(p) {
                break;
            }
            match self.prev_terminal(p) {
                Some(q) => p = q,
                None => break,
            }
        }
        let mut dirty: HashSet<NodeId> = HashSet::new();
        for n in marked {
            let mut x = Some(n);
            while let Some(y) = x {
                if !dirty.insert(y) {
                    break;
                }
                self.set_flag(y, flag::DIRTY, true);
                x = self.parent(y);
            }
        }
        self.recompute_len(root, &dirty);
        self.propagate_len(root);
        seq.into_iter().map(|(n, _)| n).collect()
    }

    fn recompute_len(&mut self, n: NodeId, dirty: &HashSet<NodeId>) -> usize {
        if self.kind(n).is_leaf() || !dirty.contains(&n) {
            return self.len(n);
        }
        let ch = self.children(n).to_vec();
        let total = ch.into_iter().map(|c| self.recompute_len(c, dirty)).sum();
        self.set_len(n, total);
        total
    }

    /// Carries a tree's length change out through its enclosing boxes.
    pub(crate) fn propagate_len(&mut self, root: NodeId) {
        let mut root = root;
        while let Some(b) = self.owner_of(root) {
            let l = self.len(root);
            self.set_len(b, l);
            let mut x = b;
            while let Some(p) = self.parent(x) {
                let total = self.children(p).iter().map(|&c| self.len(c)).sum();
                self.set_len(p, total);
                x = p;
            }
            root = x;
        }
    }
}
