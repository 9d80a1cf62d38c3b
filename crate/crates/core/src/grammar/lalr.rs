//! Symbol numbering and LALR(1) table construction.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::spec::{GrammarSpec, Symbol};
use super::GrammarError;

/// End of input.
pub const EOS: u32 = 0;
/// Type of unlexable characters; no action exists for it.
pub const ERROR: u32 = 1;
/// Terminal id of the first lexer rule.
pub const FIRST_TOKEN: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    T(u32),
    N(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prod {
    pub lhs: u32,
    pub rhs: Vec<Sym>,
}

/// A grammar with numbered symbols. Nonterminal 0 and production 0 are the
/// augmented start.
#[derive(Debug, Clone)]
pub struct Grammar {
    pub name: String,
    pub terminals: Vec<String>,
    pub nonterminals: Vec<String>,
    pub prods: Vec<Prod>,
    pub whitespace: FixedBitSet,
    /// `(terminal id, language name)` for every `<Name>` symbol.
    pub lboxes: Vec<(u32, String)>,
}

impl Grammar {
    pub fn from_spec(spec: &GrammarSpec) -> Grammar {
        let mut terminals = vec!["$".to_string(), "<error>".to_string()];
        terminals.extend(spec.token_rules.iter().map(|r| r.name.clone()));
        let mut lboxes = Vec::new();
        for l in &spec.lbox_symbols {
            lboxes.push((terminals.len() as u32, l.clone()));
            terminals.push(format!("<{l}>"));
        }
        let mut nonterminals = vec!["$start".to_string()];
        for p in &spec.productions {
            if !nonterminals.contains(&p.lhs) {
                nonterminals.push(p.lhs.clone());
            }
        }
        let tindex: HashMap<&str, u32> =
            terminals.iter().enumerate().map(|(i, t)| (t.as_str(), i as u32)).collect();
        let nindex: HashMap<&str, u32> =
            nonterminals.iter().enumerate().map(|(i, n)| (n.as_str(), i as u32)).collect();
        let mut prods = vec![Prod { lhs: 0, rhs: vec![Sym::N(nindex[spec.start_symbol.as_str()])] }];
        for p in &spec.productions {
            let rhs = p
                .rhs
                .iter()
                .map(|s| match s {
                    Symbol::Nonterminal(n) => Sym::N(nindex[n.as_str()]),
                    Symbol::Token(t) => Sym::T(tindex[t.as_str()]),
                    Symbol::LBox(b) => Sym::T(tindex[format!("<{b}>").as_str()]),
                })
                .collect();
            prods.push(Prod { lhs: nindex[p.lhs.as_str()], rhs });
        }
        let mut whitespace = FixedBitSet::with_capacity(terminals.len());
        for w in &spec.whitespace_types {
            whitespace.insert(tindex[w.as_str()] as usize);
        }
        Grammar { name: spec.name.clone(), terminals, nonterminals, prods, whitespace, lboxes }
    }

    pub fn terminal(&self, name: &str) -> Option<u32> {
        self.terminals.iter().position(|t| t == name).map(|i| i as u32)
    }

    pub fn nonterminal(&self, name: &str) -> Option<u32> {
        self.nonterminals.iter().position(|t| t == name).map(|i| i as u32)
    }

    /// Terminal id of the `<lang>` symbol, if the grammar has one.
    pub fn lbox_terminal(&self, lang: &str) -> Option<u32> {
        self.lboxes.iter().find(|(_, l)| l == lang).map(|(t, _)| *t)
    }

    pub fn is_whitespace(&self, t: u32) -> bool {
        self.whitespace.contains(t as usize)
    }

    pub fn sym_name(&self, s: Sym) -> &str {
        match s {
            Sym::T(t) => &self.terminals[t as usize],
            Sym::N(n) => &self.nonterminals[n as usize],
        }
    }

    fn item_string(&self, (p, dot): Item) -> String {
        let prod = &self.prods[p as usize];
        let mut s = format!("{} ->", self.nonterminals[prod.lhs as usize]);
        for (i, sym) in prod.rhs.iter().enumerate() {
            if i == dot as usize {
                s.push_str(" .");
            }
            s.push(' ');
            s.push_str(self.sym_name(*sym));
        }
        if dot as usize == prod.rhs.len() {
            s.push_str(" .");
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Error,
    Shift(u32),
    Reduce(u32),
    Accept,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub state: u32,
    pub terminal: String,
    pub kind: ConflictKind,
    pub items: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConflictKind {
    ShiftReduce,
    ReduceReduce,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ConflictKind::ShiftReduce => "shift/reduce",
            ConflictKind::ReduceReduce => "reduce/reduce",
        };
        write!(f, "{kind} conflict in state {} on {}: [{}]", self.state, self.terminal, self.items.join("; "))
    }
}

/// Deterministic LALR(1) parse tables.
#[derive(Debug, Clone)]
pub struct LrTables {
    pub nstates: usize,
    nterms: usize,
    nnonterms: usize,
    action: Vec<Action>,
    goto: Vec<u32>,
    pub prod_lhs: Vec<u32>,
    pub prod_len: Vec<u32>,
}

const NO_GOTO: u32 = u32::MAX;

impl LrTables {
    #[inline]
    pub fn action(&self, state: u32, term: u32) -> Action {
        if term as usize >= self.nterms {
            return Action::Error;
        }
        self.action[state as usize * self.nterms + term as usize]
    }

    #[inline]
    pub fn goto(&self, state: u32, nt: u32) -> Option<u32> {
        let g = self.goto[state as usize * self.nnonterms + nt as usize];
        (g != NO_GOTO).then_some(g)
    }

    pub fn terminal_count(&self) -> usize {
        self.nterms
    }

    /// Runs the reductions `term` triggers on `states` and reports whether
    /// it is then shifted (or accepted). `states` is left reduced.
    pub fn reduce_for(&self, states: &mut Vec<u32>, term: u32) -> Action {
        loop {
            let top = *states.last().expect("empty stack");
            match self.action(top, term) {
                Action::Reduce(p) => {
                    let n = self.prod_len[p as usize] as usize;
                    states.truncate(states.len() - n);
                    let below = *states.last().expect("reduced past bottom");
                    match self.goto(below, self.prod_lhs[p as usize]) {
                        Some(g) => states.push(g),
                        None => return Action::Error,
                    }
                }
                other => return other,
            }
        }
    }

    /// Whether `term` can be shifted on top of the given stack of states.
    pub fn shiftable_on(&self, states: &[u32], term: u32) -> bool {
        let mut s = states.to_vec();
        matches!(self.reduce_for(&mut s, term), Action::Shift(_))
    }

    /// Batch recognition of a terminal string (no whitespace).
    pub fn accepts(&self, terms: &[u32]) -> bool {
        let mut states = vec![0u32];
        for &t in terms.iter().chain(std::iter::once(&EOS)) {
            match self.reduce_for(&mut states, t) {
                Action::Shift(s) => states.push(s),
                Action::Accept => return t == EOS,
                _ => return false,
            }
        }
        false
    }
}

/// State-only test used where only an LR state is known: the lbox symbol is
/// shifted directly or triggers a reduction. Unknown symbols are never
/// shiftable.
pub fn can_shift_lbox(t: &LrTables, state: u32, sym: Option<u32>) -> bool {
    match sym {
        Some(s) => matches!(t.action(state, s), Action::Shift(_) | Action::Reduce(_)),
        None => false,
    }
}

type Item = (u32, u32);

struct Analysis<'g> {
    g: &'g Grammar,
    nullable: FixedBitSet,
    first: Vec<FixedBitSet>,
    prods_of: Vec<Vec<u32>>,
    /// Lookahead set width: terminals plus a propagation marker.
    width: usize,
}

impl<'g> Analysis<'g> {
    fn new(g: &'g Grammar) -> Self {
        let nn = g.nonterminals.len();
        let width = g.terminals.len() + 1;
        let mut prods_of = vec![Vec::new(); nn];
        for (i, p) in g.prods.iter().enumerate() {
            prods_of[p.lhs as usize].push(i as u32);
        }
        let mut nullable = FixedBitSet::with_capacity(nn);
        let mut first = vec![FixedBitSet::with_capacity(width); nn];
        loop {
            let mut changed = false;
            for p in &g.prods {
                let lhs = p.lhs as usize;
                let mut all_nullable = true;
                for s in &p.rhs {
                    match *s {
                        Sym::T(t) => {
                            if !first[lhs].put(t as usize) {
                                changed = true;
                            }
                            all_nullable = false;
                        }
                        Sym::N(n) => {
                            let add = first[n as usize].clone();
                            let before = first[lhs].count_ones(..);
                            first[lhs].union_with(&add);
                            changed |= first[lhs].count_ones(..) != before;
                            if !nullable.contains(n as usize) {
                                all_nullable = false;
                            }
                        }
                    }
                    if !all_nullable {
                        break;
                    }
                }
                if all_nullable && !nullable.put(lhs) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Analysis { g, nullable, first, prods_of, width }
    }

    /// FIRST of a symbol string, and whether it is nullable.
    fn first_of(&self, syms: &[Sym]) -> (FixedBitSet, bool) {
        let mut out = FixedBitSet::with_capacity(self.width);
        for s in syms {
            match *s {
                Sym::T(t) => {
                    out.insert(t as usize);
                    return (out, false);
                }
                Sym::N(n) => {
                    out.union_with(&self.first[n as usize]);
                    if !self.nullable.contains(n as usize) {
                        return (out, false);
                    }
                }
            }
        }
        (out, true)
    }

    fn next_sym(&self, (p, dot): Item) -> Option<Sym> {
        self.g.prods[p as usize].rhs.get(dot as usize).copied()
    }

    fn closure0(&self, kernel: &[Item]) -> Vec<Item> {
        let mut items = kernel.to_vec();
        let mut seen = FixedBitSet::with_capacity(self.g.nonterminals.len());
        let mut i = 0;
        while i < items.len() {
            if let Some(Sym::N(n)) = self.next_sym(items[i]) {
                if !seen.put(n as usize) {
                    for &q in &self.prods_of[n as usize] {
                        if !items.contains(&(q, 0)) {
                            items.push((q, 0));
                        }
                    }
                }
            }
            i += 1;
        }
        items
    }

    /// LR(1) closure with lookahead sets.
    fn closure1(&self, init: Vec<(Item, FixedBitSet)>) -> Vec<(Item, FixedBitSet)> {
        let mut items = init;
        let mut index: HashMap<Item, usize> =
            items.iter().enumerate().map(|(i, (it, _))| (*it, i)).collect();
        let mut work: Vec<usize> = (0..items.len()).collect();
        while let Some(i) = work.pop() {
            let ((p, dot), _) = items[i];
            let Some(Sym::N(n)) = self.next_sym((p, dot)) else { continue };
            let rest = &self.g.prods[p as usize].rhs[dot as usize + 1..];
            let (mut la, nullable) = self.first_of(rest);
            if nullable {
                la.union_with(&items[i].1);
            }
            for &q in &self.prods_of[n as usize] {
                match index.get(&(q, 0)) {
                    Some(&j) => {
                        let before = items[j].1.count_ones(..);
                        items[j].1.union_with(&la);
                        if items[j].1.count_ones(..) != before {
                            work.push(j);
                        }
                    }
                    None => {
                        index.insert((q, 0), items.len());
                        work.push(items.len());
                        items.push(((q, 0), la.clone()));
                    }
                }
            }
        }
        items
    }
}

/// Builds LALR(1) tables, or reports every conflict.
pub fn build_lr_tables(g: &Grammar) -> Result<LrTables, GrammarError> {
    let an = Analysis::new(g);
    let nterms = g.terminals.len();
    let nnts = g.nonterminals.len();

    // LR(0) automaton.
    let mut kernels: Vec<Vec<Item>> = vec![vec![(0, 0)]];
    let mut kindex: HashMap<Vec<Item>, u32> = HashMap::new();
    kindex.insert(kernels[0].clone(), 0);
    let mut trans: Vec<Vec<(Sym, u32)>> = Vec::new();
    let mut s = 0;
    while s < kernels.len() {
        let closure = an.closure0(&kernels[s]);
        let mut by_sym: Vec<(Sym, Vec<Item>)> = Vec::new();
        for &(p, dot) in &closure {
            if let Some(x) = an.next_sym((p, dot)) {
                match by_sym.iter_mut().find(|(y, _)| *y == x) {
                    Some((_, v)) => v.push((p, dot + 1)),
                    None => by_sym.push((x, vec![(p, dot + 1)])),
                }
            }
        }
        by_sym.sort_by_key(|(x, _)| *x);
        let mut edges = Vec::new();
        for (x, mut k) in by_sym {
            k.sort_unstable();
            k.dedup();
            let id = match kindex.get(&k) {
                Some(&id) => id,
                None => {
                    let id = kernels.len() as u32;
                    kindex.insert(k.clone(), id);
                    kernels.push(k);
                    id
                }
            };
            edges.push((x, id));
        }
        trans.push(edges);
        s += 1;
    }
    let nstates = kernels.len();
    let target = |s: usize, x: Sym| trans[s].iter().find(|(y, _)| *y == x).map(|(_, t)| *t as usize);

    // Lookahead propagation between kernel items.
    let marker = nterms;
    let mut la: Vec<Vec<FixedBitSet>> =
        kernels.iter().map(|k| vec![FixedBitSet::with_capacity(an.width); k.len()]).collect();
    la[0][0].insert(EOS as usize);
    let mut edges: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for s in 0..nstates {
        for (ki, &item) in kernels[s].iter().enumerate() {
            let mut init = FixedBitSet::with_capacity(an.width);
            init.insert(marker);
            for ((p, dot), set) in an.closure1(vec![(item, init)]) {
                let Some(x) = an.next_sym((p, dot)) else { continue };
                let t = target(s, x).expect("transition exists");
                let tj = kernels[t].iter().position(|&it| it == (p, dot + 1)).expect("kernel item");
                for a in set.ones() {
                    if a == marker {
                        edges.push(((s, ki), (t, tj)));
                    } else {
                        la[t][tj].insert(a);
                    }
                }
            }
        }
    }
    loop {
        let mut changed = false;
        for &((s, i), (t, j)) in &edges {
            let src = la[s][i].clone();
            let before = la[t][j].count_ones(..);
            la[t][j].union_with(&src);
            changed |= la[t][j].count_ones(..) != before;
        }
        if !changed {
            break;
        }
    }

    // Tables.
    let mut action = vec![Action::Error; nstates * nterms];
    let mut goto = vec![NO_GOTO; nstates * nnts];
    let mut conflicts = Vec::new();
    for s in 0..nstates {
        let init: Vec<(Item, FixedBitSet)> =
            kernels[s].iter().copied().zip(la[s].iter().cloned()).collect();
        let closure = an.closure1(init);
        for &(x, t) in &trans[s] {
            match x {
                Sym::T(term) => action[s * nterms + term as usize] = Action::Shift(t),
                Sym::N(n) => goto[s * nnts + n as usize] = t,
            }
        }
        for (item, set) in &closure {
            let (p, dot) = *item;
            if dot as usize != g.prods[p as usize].rhs.len() {
                continue;
            }
            for a in set.ones().filter(|&a| a != marker) {
                let cell = &mut action[s * nterms + a];
                let new = if p == 0 { Action::Accept } else { Action::Reduce(p) };
                match *cell {
                    Action::Error => *cell = new,
                    existing if existing == new => {}
                    existing => {
                        let kind = if matches!(existing, Action::Shift(_)) {
                            ConflictKind::ShiftReduce
                        } else {
                            ConflictKind::ReduceReduce
                        };
                        conflicts.push((s, a as u32, kind));
                    }
                }
            }
        }
    }
    if !conflicts.is_empty() {
        conflicts.sort_by_key(|&(s, a, _)| (s, a));
        conflicts.dedup_by_key(|c| (c.0, c.1));
        let list = conflicts
            .into_iter()
            .map(|(s, a, kind)| {
                let closure = an.closure0(&kernels[s]);
                let items = closure
                    .iter()
                    .filter(|&&it| {
                        let at_end = an.next_sym(it).is_none();
                        at_end || an.next_sym(it) == Some(Sym::T(a))
                    })
                    .map(|&it| g.item_string(it))
                    .collect();
                Conflict { state: s as u32, terminal: g.terminals[a as usize].clone(), kind, items }
            })
            .collect();
        return Err(GrammarError::Conflicts(list));
    }

    Ok(LrTables {
        nstates,
        nterms,
        nnonterms: nnts,
        action,
        goto,
        prod_lhs: g.prods.iter().map(|p| p.lhs).collect(),
        prod_len: g.prods.iter().map(|p| p.rhs.len() as u32).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::spec::parse_grammar_spec;

    fn tables(src: &str) -> (Grammar, Result<LrTables, GrammarError>) {
        let g = Grammar::from_spec(&parse_grammar_spec(src).unwrap());
        let t = build_lr_tables(&g);
        (g, t)
    }

    fn terms(g: &Grammar, s: &str) -> Vec<u32> {
        s.chars().map(|c| g.terminal(&format!("\"{c}\"")).unwrap()).collect()
    }

    #[test]
    fn single_token_grammar_has_three_states() {
        let (g, t) = tables(r#"S -> "a""#);
        let t = t.unwrap();
        assert_eq!(t.nstates, 3);
        assert!(t.accepts(&terms(&g, "a")));
        assert!(!t.accepts(&[]));
        assert!(!t.accepts(&terms(&g, "aa")));
    }

    #[test]
    fn right_recursion_is_lalr() {
        let (g, t) = tables(r#"S -> "a" S | "a""#);
        let t = t.unwrap();
        for s in ["a", "aa", "aaa"] {
            assert!(t.accepts(&terms(&g, s)), "{s}");
        }
        assert!(!t.accepts(&[]));
    }

    #[test]
    fn ambiguous_grammar_reports_conflicts() {
        let (_, t) = tables(r#"S -> S S | "a""#);
        match t {
            Err(GrammarError::Conflicts(cs)) => {
                assert!(!cs.is_empty());
                assert!(cs.iter().all(|c| c.kind == ConflictKind::ShiftReduce));
                assert!(cs.iter().all(|c| !c.items.is_empty()));
                assert!(cs[0].to_string().contains("S -> S S ."));
            }
            other => panic!("expected conflicts, got {other:?}"),
        }
    }

    #[test]
    fn reduce_reduce_conflict() {
        let (_, t) = tables(r#"S -> A | B; A -> "x"; B -> "x""#);
        match t {
            Err(GrammarError::Conflicts(cs)) => {
                assert!(cs.iter().any(|c| c.kind == ConflictKind::ReduceReduce))
            }
            other => panic!("expected conflicts, got {other:?}"),
        }
    }

    #[test]
    fn lalr_but_not_slr() {
        // Classic grammar that SLR(1) rejects and LALR(1) accepts.
        let src = r#"S -> L "=" R | R; L -> "*" R | "i"; R -> L"#;
        let (g, t) = tables(src);
        let t = t.unwrap();
        assert!(t.accepts(&terms(&g, "*i=i")));
        assert!(!t.accepts(&terms(&g, "i=")));
    }

    #[test]
    fn lbox_shiftability() {
        let (g, t) = tables(r#"S -> "x" "=" E; E -> "n" | <Sql>"#);
        let t = t.unwrap();
        let sql = g.lbox_terminal("Sql");
        let eq = terms(&g, "x=");
        let mut states = vec![0];
        for term in eq {
            match t.reduce_for(&mut states, term) {
                Action::Shift(s) => states.push(s),
                other => panic!("{other:?}"),
            }
        }
        let top = *states.last().unwrap();
        assert!(can_shift_lbox(&t, top, sql));
        assert!(t.shiftable_on(&states, sql.unwrap()));
        assert!(!can_shift_lbox(&t, 0, sql));
        assert!(!can_shift_lbox(&t, 0, g.lbox_terminal("Html")));
    }
}
