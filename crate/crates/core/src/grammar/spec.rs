//! Grammar definition files.
//!
//! ```text
//! %name Calc
//! %whitespace WS
//! token WS /[ \t\n]+/;
//! token NUM /[0-9]+/;
//! expr: expr "+" NUM | NUM | <Other>;
//! ```

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use regex_syntax::ParserBuilder;

use super::scan::{tokenize, Cursor, Tok};
use super::GrammarError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenRule {
    pub name: String,
    pub pattern: String,
    /// Implicit rule created from a quoted literal in a production.
    pub literal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Symbol {
    Nonterminal(String),
    Token(String),
    LBox(String),
}

impl Symbol {
    pub fn name(&self) -> String {
        match self {
            Symbol::Nonterminal(n) | Symbol::Token(n) => n.clone(),
            Symbol::LBox(n) => format!("<{n}>"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub lhs: String,
    pub rhs: Vec<Symbol>,
}

/// A validated grammar definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrammarSpec {
    pub name: String,
    /// Lexer rules in priority order: literals first, then declared tokens.
    pub token_rules: Vec<TokenRule>,
    pub whitespace_types: Vec<String>,
    pub productions: Vec<Production>,
    pub start_symbol: String,
    pub lbox_symbols: Vec<String>,
}

impl GrammarSpec {
    pub fn is_whitespace(&self, token: &str) -> bool {
        self.whitespace_types.iter().any(|w| w == token)
    }

    pub fn token_names(&self) -> impl Iterator<Item = &str> {
        self.token_rules.iter().map(|r| r.name.as_str())
    }
}

enum RawSym {
    Ident(String, (usize, usize)),
    Literal(String),
    LBox(String),
}

struct RawProd {
    lhs: String,
    alts: Vec<Vec<RawSym>>,
}

/// Parses and validates a grammar file.
pub fn parse_grammar_spec(text: &str) -> Result<GrammarSpec, GrammarError> {
    let mut cur = Cursor::new(tokenize(text)?, text);
    let mut name: Option<String> = None;
    let mut start: Option<String> = None;
    let mut whitespace: Vec<String> = Vec::new();
    let mut declared: Vec<TokenRule> = Vec::new();
    let mut prods: Vec<RawProd> = Vec::new();

    loop {
        cur.skip_newlines();
        let Some(tok) = cur.peek().cloned() else { break };
        match tok {
            Tok::Directive(d) => {
                cur.next();
                let mut args = Vec::new();
                while let Some(Tok::Ident(a)) = cur.peek() {
                    args.push(a.clone());
                    cur.next();
                }
                end_of_statement(&mut cur)?;
                match d.as_str() {
                    "name" | "start" if args.len() != 1 => {
                        return Err(cur.error(format!("`%{d}` takes exactly one name")))
                    }
                    "name" => name = Some(args.remove(0)),
                    "start" => start = Some(args.remove(0)),
                    "whitespace" => whitespace.extend(args),
                    other => return Err(cur.error(format!("unknown directive `%{other}`"))),
                }
            }
            Tok::Ident(ref kw)
                if kw == "token"
                    && matches!(cur.peek_at(1), Some(Tok::Ident(_)))
                    && matches!(cur.peek_at(2), Some(Tok::Regex(_) | Tok::Literal(_))) =>
            {
                cur.next();
                let tname = cur.expect_ident("token name")?;
                let pattern = match cur.next() {
                    Some(Tok::Regex(r)) => r,
                    Some(Tok::Literal(l)) => regex_syntax::escape(&l),
                    _ => unreachable!(),
                };
                end_of_statement(&mut cur)?;
                if declared.iter().any(|r| r.name == tname) {
                    return Err(GrammarError::DuplicateToken(tname));
                }
                declared.push(TokenRule { name: tname, pattern, literal: false });
            }
            Tok::Ident(_) => prods.push(parse_production(&mut cur)?),
            _ => return Err(cur.error("expected a directive, token rule or production")),
        }
    }

    build_spec(name, start, whitespace, declared, prods)
}

fn end_of_statement(cur: &mut Cursor) -> Result<(), GrammarError> {
    match cur.peek() {
        None | Some(Tok::Newline) => Ok(()),
        Some(Tok::Semi) => {
            cur.next();
            Ok(())
        }
        _ => Err(cur.error("expected end of statement")),
    }
}

fn parse_production(cur: &mut Cursor) -> Result<RawProd, GrammarError> {
    let lhs = cur.expect_ident("nonterminal name")?;
    match cur.next() {
        Some(Tok::Colon) | Some(Tok::Arrow) => {}
        _ => return Err(cur.error(format!("expected `:` or `->` after `{lhs}`"))),
    }
    let mut alts = vec![Vec::new()];
    loop {
        let here = cur.here();
        match cur.peek().cloned() {
            None => break,
            Some(Tok::Semi) => {
                cur.next();
                break;
            }
            Some(Tok::Newline) => {
                cur.next();
                cur.skip_newlines();
                // Without a terminating `;`, a following `name:` starts the next rule.
                if matches!(cur.peek(), Some(Tok::Ident(_)))
                    && matches!(cur.peek_at(1), Some(Tok::Colon | Tok::Arrow))
                {
                    break;
                }
            }
            Some(Tok::Pipe) => {
                cur.next();
                alts.push(Vec::new());
            }
            Some(Tok::Ident(s)) => {
                cur.next();
                alts.last_mut().unwrap().push(RawSym::Ident(s, here));
            }
            Some(Tok::Literal(s)) => {
                cur.next();
                alts.last_mut().unwrap().push(RawSym::Literal(s));
            }
            Some(Tok::LBox(s)) => {
                cur.next();
                alts.last_mut().unwrap().push(RawSym::LBox(s));
            }
            Some(_) => return Err(cur.error("unexpected symbol in production")),
        }
    }
    Ok(RawProd { lhs, alts })
}

pub(crate) fn literal_name(lit: &str) -> String {
    format!("\"{lit}\"")
}

fn build_spec(
    name: Option<String>,
    start: Option<String>,
    whitespace: Vec<String>,
    declared: Vec<TokenRule>,
    prods: Vec<RawProd>,
) -> Result<GrammarSpec, GrammarError> {
    if prods.is_empty() {
        return Err(GrammarError::NoProductions);
    }
    let nonterms: HashSet<&str> = prods.iter().map(|p| p.lhs.as_str()).collect();
    for t in &declared {
        if nonterms.contains(t.name.as_str()) {
            return Err(GrammarError::NameClash(t.name.clone()));
        }
    }
    for w in &whitespace {
        if !declared.iter().any(|t| &t.name == w) {
            return Err(GrammarError::UnknownWhitespace(w.clone()));
        }
    }

    let mut literals: Vec<TokenRule> = Vec::new();
    let mut lboxes: Vec<String> = Vec::new();
    let mut productions = Vec::new();
    for p in &prods {
        for alt in &p.alts {
            let mut rhs = Vec::new();
            for s in alt {
                rhs.push(match s {
                    RawSym::Ident(id, _) if nonterms.contains(id.as_str()) => {
                        Symbol::Nonterminal(id.clone())
                    }
                    RawSym::Ident(id, _) if declared.iter().any(|t| &t.name == id) => {
                        Symbol::Token(id.clone())
                    }
                    RawSym::Ident(id, at) => return Err(GrammarError::Undeclared(id.clone(), Some(*at))),
                    RawSym::Literal(l) => {
                        let n = literal_name(l);
                        if !literals.iter().any(|t| t.name == n) {
                            literals.push(TokenRule {
                                name: n.clone(),
                                pattern: regex_syntax::escape(l),
                                literal: true,
                            });
                        }
                        Symbol::Token(n)
                    }
                    RawSym::LBox(b) => {
                        if !lboxes.contains(b) {
                            lboxes.push(b.clone());
                        }
                        Symbol::LBox(b.clone())
                    }
                });
            }
            productions.push(Production { lhs: p.lhs.clone(), rhs });
        }
    }

    let mut token_rules = literals;
    token_rules.extend(declared);
    for rule in &token_rules {
        check_pattern(rule)?;
    }

    let start_symbol = start.unwrap_or_else(|| prods[0].lhs.clone());
    if !nonterms.contains(start_symbol.as_str()) {
        return Err(GrammarError::Undeclared(start_symbol, None));
    }
    let spec = GrammarSpec {
        name: name.unwrap_or_else(|| "grammar".to_string()),
        token_rules,
        whitespace_types: whitespace,
        productions,
        start_symbol,
        lbox_symbols: lboxes,
    };
    if !productive(&spec).contains(&spec.start_symbol) {
        return Err(GrammarError::Unproductive(spec.start_symbol));
    }
    Ok(spec)
}

fn check_pattern(rule: &TokenRule) -> Result<(), GrammarError> {
    let hir = ParserBuilder::new()
        .build()
        .parse(&rule.pattern)
        .map_err(|e| GrammarError::BadPattern { name: rule.name.clone(), msg: e.to_string() })?;
    if hir.properties().minimum_len() == Some(0) {
        return Err(GrammarError::EmptyPattern(rule.name.clone()));
    }
    Ok(())
}

/// Nonterminals that derive at least one terminal string.
fn productive(spec: &GrammarSpec) -> HashSet<String> {
    let idx: HashMap<&str, usize> = {
        let mut m = HashMap::new();
        for p in &spec.productions {
            let n = m.len();
            m.entry(p.lhs.as_str()).or_insert(n);
        }
        m
    };
    let mut done = FixedBitSet::with_capacity(idx.len());
    loop {
        let mut changed = false;
        for p in &spec.productions {
            let i = idx[p.lhs.as_str()];
            if done.contains(i) {
                continue;
            }
            let ok = p.rhs.iter().all(|s| match s {
                Symbol::Nonterminal(n) => done.contains(idx[n.as_str()]),
                _ => true,
            });
            if ok {
                done.insert(i);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    idx.iter()
        .filter(|(_, &i)| done.contains(i))
        .map(|(n, _)| n.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_grammar() {
        let g = parse_grammar_spec(r#"S -> "a""#).unwrap();
        assert_eq!(g.productions.len(), 1);
        assert_eq!(g.token_rules.len(), 1);
        assert_eq!(g.start_symbol, "S");
        assert_eq!(g.token_rules[0].name, "\"a\"");
    }

    #[test]
    fn directives_tokens_and_lboxes() {
        let src = "%name Calc\n%whitespace WS\ntoken WS /[ \\t]+/;\ntoken NUM /[0-9]+/;\n\
                   e: e \"+\" NUM\n | NUM | <Sql>;\n";
        let g = parse_grammar_spec(src).unwrap();
        assert_eq!(g.name, "Calc");
        assert_eq!(g.whitespace_types, vec!["WS"]);
        assert_eq!(g.productions.len(), 3);
        assert_eq!(g.lbox_symbols, vec!["Sql"]);
        let names: Vec<_> = g.token_names().collect();
        assert_eq!(names, vec!["\"+\"", "WS", "NUM"]);
    }

    #[test]
    fn rules_without_semicolons() {
        let g = parse_grammar_spec("a: b \"x\"\nb: \"y\" | \n").unwrap();
        assert_eq!(g.productions.len(), 3);
        assert!(g.productions[2].rhs.is_empty());
    }

    #[test]
    fn undeclared_symbol_is_named() {
        let err = parse_grammar_spec("S: X \"a\";").unwrap_err();
        assert!(matches!(err, GrammarError::Undeclared(ref n, Some(_)) if n == "X"), "{err}");
        assert!(err.to_string().contains('X'));
    }

    #[test]
    fn duplicate_token() {
        let err = parse_grammar_spec("token A /a/;\ntoken A /b/;\nS: A;").unwrap_err();
        assert!(matches!(err, GrammarError::DuplicateToken(ref n) if n == "A"));
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_grammar_spec("S: \"a\";\nT: = ;").unwrap_err();
        match err {
            GrammarError::Syntax { line, col, .. } => assert_eq!((line, col), (2, 4)),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn bad_patterns() {
        assert!(matches!(
            parse_grammar_spec("token A /(/;\nS: A;"),
            Err(GrammarError::BadPattern { .. })
        ));
        assert!(matches!(
            parse_grammar_spec("token A /a*/;\nS: A;"),
            Err(GrammarError::EmptyPattern(_))
        ));
        assert!(matches!(
            parse_grammar_spec("%whitespace WS\nS: \"a\";"),
            Err(GrammarError::UnknownWhitespace(_))
        ));
    }

    #[test]
    fn unproductive_start() {
        assert!(matches!(
            parse_grammar_spec("S: S \"a\";"),
            Err(GrammarError::Unproductive(_))
        ));
    }
}
