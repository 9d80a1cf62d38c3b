//! Structural summaries of trees and a plain batch LR parser to compare
//! them against.

use super::doc::{Document, Kind, NodeId};
use crate::grammar::{Action, Composition, Language};

/// S-expression of the subtree at `n`, whitespace omitted and boxes shown
/// as `<lang ...>`.
pub fn tree_shape(doc: &Document, n: NodeId) -> String {
    let mut out = String::new();
    push_shape(doc, n, &mut out);
    out
}

fn push_shape(doc: &Document, n: NodeId, out: &mut String) {
    match doc.kind(n) {
        Kind::Token => {
            if !doc.is_whitespace_leaf(n) {
                out.push_str(&format!("{:?} ", doc.text(n)));
            }
        }
        Kind::LBox => {
            let b = doc.box_data(n);
            out.push_str(&format!("<{} ", doc.composition().langs[b.lang].id));
            push_shape(doc, b.inner, out);
            out.push_str("> ");
        }
        Kind::Bos | Kind::Eos => {}
        Kind::Root => {
            for &c in doc.children(n) {
                push_shape(doc, c, out);
            }
        }
        Kind::Nonterm => {
            out.push_str(&format!("({} ", doc.sym_name(n)));
            for &c in doc.children(n) {
                push_shape(doc, c, out);
            }
            out.push_str(") ");
        }
    }
}

/// Parses `text` from scratch, returning the shape `tree_shape` would give
/// for an accepted document.
pub fn batch_shape(lang: &Language, text: &str) -> Option<String> {
    let t = &lang.tables;
    let toks: Vec<(u32, usize, usize)> =
        lang.lex(text).into_iter().filter(|&(k, _, _)| !lang.is_whitespace(k)).collect();
    let mut states = vec![0u32];
    let mut shapes: Vec<String> = Vec::new();
    let mut i = 0;
    loop {
        let (term, a, b) = toks.get(i).copied().unwrap_or((crate::grammar::lalr::EOS, 0, 0));
        match t.action(*states.last().unwrap(), term) {
            Action::Shift(s) => {
                states.push(s);
                shapes.push(format!("{:?} ", &text[a..b]));
                i += 1;
            }
            Action::Reduce(p) => {
                let n = t.prod_len[p as usize] as usize;
                let lhs = t.prod_lhs[p as usize];
                states.truncate(states.len() - n);
                let kids: String = shapes.drain(shapes.len() - n..).collect();
                shapes.push(format!("({} {kids}) ", lang.grammar.nonterminals[lhs as usize]));
                states.push(t.goto(*states.last().unwrap(), lhs)?);
            }
            Action::Accept => return shapes.pop(),
            Action::Error => return None,
        }
    }
}

/// LR states after shifting `terms` from the initial state, with no
/// lookahead reductions for whatever follows.
pub fn batch_states(lang: &Language, terms: &[u32]) -> Option<Vec<u32>> {
    let mut states = vec![0u32];
    for &term in terms {
        match lang.tables.reduce_for(&mut states, term) {
            Action::Shift(s) => states.push(s),
            _ => return None,
        }
    }
    Some(states)
}

/// End offsets of the non-empty token prefixes of `text` that language
/// `lang` accepts, found by parsing each prefix from scratch. Looks at no
/// more than `limit` tokens and honours the composition's start hint.
pub fn batch_prefix_ends(comp: &Composition, lang: usize, text: &str, limit: usize) -> Vec<usize> {
    let l = &comp.langs[lang];
    let toks: Vec<(u32, usize, usize)> = l.lex(text).into_iter().filter(|&(k, _, _)| !l.is_whitespace(k)).collect();
    match toks.first() {
        Some(&(k, _, _)) if comp.hint_allows_term(lang, k) => {}
        _ => return Vec::new(),
    }
    let terms: Vec<u32> = toks.iter().map(|t| t.0).collect();
    (1..=toks.len().min(limit)).filter(|&k| l.tables.accepts(&terms[..k])).map(|k| toks[k - 1].2).collect()
}
