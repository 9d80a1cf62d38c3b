//! Grammar files, lexers, LALR(1) tables and language compositions.

pub mod composition;
pub mod lalr;
pub mod lexer;
mod scan;
pub mod spec;

use thiserror::Error;

pub use composition::{hint_allows, parse_composition, Composition, CompositionSpec, Hint};
pub use lalr::{build_lr_tables, can_shift_lbox, Action, Conflict, Grammar, LrTables, Sym};
pub use lexer::{Lexer, Scan};
pub use spec::{parse_grammar_spec, GrammarSpec, Production, Symbol, TokenRule};

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("undeclared symbol `{0}`{at}", at = .1.map(|(l, c)| format!(" at {l}:{c}")).unwrap_or_default())]
    Undeclared(String, Option<(usize, usize)>),
    #[error("duplicate token type `{0}`")]
    DuplicateToken(String),
    #[error("`{0}` is declared both as a token and a nonterminal")]
    NameClash(String),
    #[error("invalid pattern for `{name}`: {msg}")]
    BadPattern { name: String, msg: String },
    #[error("pattern for `{0}` matches the empty string")]
    EmptyPattern(String),
    #[error("whitespace type `{0}` has no token rule")]
    UnknownWhitespace(String),
    #[error("start symbol `{0}` derives no sentence")]
    Unproductive(String),
    #[error("grammar has no productions")]
    NoProductions,
    #[error("grammar is not LALR(1):\n{}", fmt_conflicts(.0))]
    Conflicts(Vec<Conflict>),
    #[error("composition: {0}")]
    Composition(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    InFile { path: String, source: Box<GrammarError> },
}

fn fmt_conflicts(cs: &[Conflict]) -> String {
    cs.iter().map(|c| format!("  {c}")).collect::<Vec<_>>().join("\n")
}

/// A compiled language: grammar, tables and lexer.
#[derive(Debug)]
pub struct Language {
    pub id: String,
    pub spec: GrammarSpec,
    pub grammar: Grammar,
    pub tables: LrTables,
    pub lexer: Lexer,
}

impl Language {
    pub fn new(id: &str, spec: GrammarSpec) -> Result<Language, GrammarError> {
        let grammar = Grammar::from_spec(&spec);
        let tables = build_lr_tables(&grammar)?;
        let patterns: Vec<&str> = spec.token_rules.iter().map(|r| r.pattern.as_str()).collect();
        let lexer = Lexer::new(&patterns)?;
        Ok(Language { id: id.to_string(), spec, grammar, tables, lexer })
    }

    pub fn from_source(id: &str, text: &str) -> Result<Language, GrammarError> {
        Language::new(id, parse_grammar_spec(text)?)
    }

    /// Terminal id produced by lexer rule `rule`.
    #[inline]
    pub fn rule_terminal(&self, rule: usize) -> u32 {
        lalr::FIRST_TOKEN + rule as u32
    }

    #[inline]
    pub fn is_whitespace(&self, term: u32) -> bool {
        self.grammar.is_whitespace(term)
    }

    pub fn terminal_name(&self, term: u32) -> &str {
        &self.grammar.terminals[term as usize]
    }

    /// Batch lex into `(terminal, start, end)` triples.
    pub fn lex(&self, text: &str) -> Vec<(u32, usize, usize)> {
        self.lexer
            .tokenize(text)
            .into_iter()
            .map(|(r, a, b, _)| (r.map_or(lalr::ERROR, |r| self.rule_terminal(r)), a, b))
            .collect()
    }

    /// Whether the grammar accepts `text` as a whole, ignoring whitespace.
    pub fn accepts_text(&self, text: &str) -> bool {
        let terms: Vec<u32> = self
            .lex(text)
            .into_iter()
            .map(|(t, _, _)| t)
            .filter(|&t| !self.is_whitespace(t))
            .collect();
        self.tables.accepts(&terms)
    }
}
