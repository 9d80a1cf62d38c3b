//! Longest-match lexer over a multi-pattern DFA.

use std::collections::HashSet;

use regex_automata::dfa::{dense, Automaton, StartKind};
use regex_automata::util::{primitives::StateID, start};
use regex_automata::{Anchored, MatchKind};

use super::GrammarError;

/// Result of scanning one token at a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    /// `rule` matched `len` bytes after examining `len + lookahead` bytes
    /// (reaching the end of input counts as one examined byte).
    Token { rule: usize, len: usize, lookahead: usize },
    /// No rule matches; `len` covers one character.
    Error { len: usize, lookahead: usize },
    /// The buffer ended before the match could be decided.
    NeedMore,
}

pub struct Lexer {
    dfa: dense::DFA<Vec<u32>>,
    start: StateID,
    rules: usize,
    /// Match states from which every byte leads to the dead state.
    final_matches: HashSet<StateID>,
}

impl std::fmt::Debug for Lexer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lexer").field("rules", &self.rules).finish()
    }
}

impl Lexer {
    pub fn new<S: AsRef<str>>(patterns: &[S]) -> Result<Self, GrammarError> {
        let pats: Vec<&str> = patterns.iter().map(|p| p.as_ref()).collect();
        let dfa = dense::Builder::new()
            .configure(
                dense::Config::new()
                    .match_kind(MatchKind::All)
                    .start_kind(StartKind::Anchored),
            )
            .build_many(&pats)
            .map_err(|e| GrammarError::BadPattern { name: "<lexer>".into(), msg: e.to_string() })?;
        let start = dfa
            .start_state(&start::Config::new().anchored(Anchored::Yes))
            .map_err(|e| GrammarError::BadPattern { name: "<lexer>".into(), msg: e.to_string() })?;
        let final_matches = final_match_states(&dfa, start);
        Ok(Lexer { dfa, start, rules: pats.len(), final_matches })
    }

    pub fn rule_count(&self) -> usize {
        self.rules
    }

    /// Scans the token starting at `pos`. `at_end` says whether `buf` ends
    /// at a real boundary (end of text or a language box).
    pub fn scan(&self, buf: &[u8], pos: usize, at_end: bool) -> Scan {
        debug_assert!(pos < buf.len());
        let dfa = &self.dfa;
        let mut state = self.start;
        let mut best: Option<(usize, usize)> = None;
        let mut i = pos;
        let examined_to = loop {
            if i == buf.len() {
                if !at_end {
                    return Scan::NeedMore;
                }
                state = dfa.next_eoi_state(state);
                if dfa.is_match_state(state) {
                    best = Some((i - pos, self.lowest_pattern(state)));
                }
                break i + 1;
            }
            state = dfa.next_state(state, buf[i]);
            if dfa.is_special_state(state) {
                if dfa.is_match_state(state) {
                    best = Some((i - pos, self.lowest_pattern(state)));
                    if self.final_matches.contains(&state) {
                        break i + 1;
                    }
                }
                if dfa.is_dead_state(state) || dfa.is_quit_state(state) {
                    break i + 1;
                }
            }
            i += 1;
        };
        match best {
            Some((len, rule)) => Scan::Token { rule, len, lookahead: examined_to - pos - len },
            None => {
                let len = utf8_width(buf[pos]);
                if pos + len > buf.len() && !at_end {
                    return Scan::NeedMore;
                }
                let len = len.min(buf.len() - pos);
                let lookahead = (examined_to - pos).saturating_sub(len).max(1);
                Scan::Error { len, lookahead }
            }
        }
    }

    fn lowest_pattern(&self, state: StateID) -> usize {
        (0..self.dfa.match_len(state))
            .map(|i| self.dfa.match_pattern(state, i).as_usize())
            .min()
            .expect("match state without patterns")
    }

    /// Batch tokenization: `(rule or None for error, start, end, lookahead)`.
    pub fn tokenize(&self, text: &str) -> Vec<(Option<usize>, usize, usize, usize)> {
        let buf = text.as_bytes();
        let mut out = Vec::new();
        let mut pos = 0;
        while pos < buf.len() {
            match self.scan(buf, pos, true) {
                Scan::Token { rule, len, lookahead } => {
                    out.push((Some(rule), pos, pos + len, lookahead));
                    pos += len;
                }
                Scan::Error { len, lookahead } => {
                    out.push((None, pos, pos + len, lookahead));
                    pos += len;
                }
                Scan::NeedMore => unreachable!("complete buffer"),
            }
        }
        out
    }
}

fn final_match_states(dfa: &dense::DFA<Vec<u32>>, start: StateID) -> HashSet<StateID> {
    let reps: Vec<u8> = dfa
        .byte_classes()
        .representatives(..)
        .filter_map(|u| u.as_u8())
        .collect();
    let mut seen = HashSet::from([start]);
    let mut work = vec![start];
    let mut out = HashSet::new();
    while let Some(s) = work.pop() {
        let mut all_dead = true;
        for &b in &reps {
            let t = dfa.next_state(s, b);
            if !dfa.is_dead_state(t) {
                all_dead = false;
                if seen.insert(t) {
                    work.push(t);
                }
            }
        }
        if all_dead && dfa.is_match_state(s) {
            out.insert(s);
        }
    }
    out
}

fn utf8_width(b: u8) -> usize {
    match b {
        0x00..=0x7f => 1,
        0xc0..=0xdf => 2,
        0xe0..=0xef => 3,
        0xf0..=0xf7 => 4,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lexer() -> Lexer {
        Lexer::new(&[r"if", r"[a-z]+", r"[0-9]+", r"[ ]+", r"//[^\n]*", r"/"]).unwrap()
    }

    fn kinds(l: &Lexer, s: &str) -> Vec<(Option<usize>, String)> {
        l.tokenize(s)
            .into_iter()
            .map(|(r, a, b, _)| (r, s[a..b].to_string()))
            .collect()
    }

    #[test]
    fn longest_match_then_declaration_order() {
        let l = lexer();
        let toks = kinds(&l, "if iffy 12");
        assert_eq!(
            toks,
            vec![
                (Some(0), "if".into()),
                (Some(3), " ".into()),
                (Some(1), "iffy".into()),
                (Some(3), " ".into()),
                (Some(2), "12".into())
            ]
        );
    }

    #[test]
    fn lookahead_counts_examined_bytes() {
        let l = lexer();
        // "ab" then '+' kills the DFA: one byte of lookahead.
        assert_eq!(l.scan(b"ab+", 0, true), Scan::Token { rule: 1, len: 2, lookahead: 1 });
        // At end of input the end itself counts as examined.
        assert_eq!(l.scan(b"ab", 0, true), Scan::Token { rule: 1, len: 2, lookahead: 1 });
        // A slash not followed by a second one stops after one byte.
        match l.scan(b"/ x", 0, true) {
            Scan::Token { rule: 5, len: 1, lookahead: 1 } => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn need_more_when_undecided() {
        let l = lexer();
        assert_eq!(l.scan(b"abc", 0, false), Scan::NeedMore);
        assert!(matches!(l.scan(b"ab ", 0, false), Scan::Token { len: 2, .. }));
    }

    #[test]
    fn unlexable_characters_become_error_tokens() {
        let l = lexer();
        let toks = kinds(&l, "a#é");
        assert_eq!(toks[1], (None, "#".into()));
        assert_eq!(toks[2], (None, "é".into()));
    }
}
