//! Tokenizer shared by the grammar and composition file parsers.

use super::GrammarError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Directive(String),
    Ident(String),
    Literal(String),
    Regex(String),
    LBox(String),
    Colon,
    Arrow,
    Pipe,
    Semi,
    Comma,
    Equals,
    Newline,
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, GrammarError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    macro_rules! bail {
        ($l:expr, $c:expr, $($arg:tt)*) => {
            return Err(GrammarError::Syntax { line: $l, col: $c, msg: format!($($arg)*) })
        };
    }

    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                out.push(Spanned { tok: Tok::Newline, line, col });
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => advance(1, &mut i, &mut col),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' if chars.get(i + 1) == Some(&'/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' => {
                let mut s = String::new();
                let mut j = i + 1;
                loop {
                    match chars.get(j) {
                        None | Some('\n') => bail!(tl, tc, "unterminated regular expression"),
                        Some('\\') if chars.get(j + 1) == Some(&'/') => {
                            s.push('/');
                            j += 2;
                        }
                        Some('\\') => {
                            s.push('\\');
                            if let Some(&n) = chars.get(j + 1) {
                                s.push(n);
                            }
                            j += 2;
                        }
                        Some('/') => break,
                        Some(&ch) => {
                            s.push(ch);
                            j += 1;
                        }
                    }
                }
                out.push(Spanned { tok: Tok::Regex(s), line: tl, col: tc });
                let n = j + 1 - i;
                advance(n, &mut i, &mut col);
            }
            '"' | '\'' => {
                let quote = c;
                let mut s = String::new();
                let mut j = i + 1;
                loop {
                    match chars.get(j) {
                        None | Some('\n') => bail!(tl, tc, "unterminated literal"),
                        Some('\\') => {
                            match chars.get(j + 1) {
                                Some('n') => s.push('\n'),
                                Some('t') => s.push('\t'),
                                Some(&other) => s.push(other),
                                None => bail!(tl, tc, "unterminated literal"),
                            }
                            j += 2;
                        }
                        Some(&ch) if ch == quote => break,
                        Some(&ch) => {
                            s.push(ch);
                            j += 1;
                        }
                    }
                }
                if s.is_empty() {
                    bail!(tl, tc, "empty literal");
                }
                out.push(Spanned { tok: Tok::Literal(s), line: tl, col: tc });
                let n = j + 1 - i;
                advance(n, &mut i, &mut col);
            }
            '<' => {
                let mut j = i + 1;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                if j == i + 1 || chars.get(j) != Some(&'>') {
                    bail!(tl, tc, "malformed language box symbol");
                }
                let name: String = chars[i + 1..j].iter().collect();
                out.push(Spanned { tok: Tok::LBox(name), line: tl, col: tc });
                let n = j + 1 - i;
                advance(n, &mut i, &mut col);
            }
            '%' => {
                let mut j = i + 1;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                let name: String = chars[i + 1..j].iter().collect();
                if name.is_empty() {
                    bail!(tl, tc, "expected directive name after `%`");
                }
                out.push(Spanned { tok: Tok::Directive(name), line: tl, col: tc });
                let n = j - i;
                advance(n, &mut i, &mut col);
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Spanned { tok: Tok::Arrow, line: tl, col: tc });
                advance(2, &mut i, &mut col);
            }
            ':' | '|' | ';' | ',' | '=' => {
                let tok = match c {
                    ':' => Tok::Colon,
                    '|' => Tok::Pipe,
                    ';' => Tok::Semi,
                    ',' => Tok::Comma,
                    _ => Tok::Equals,
                };
                out.push(Spanned { tok, line: tl, col: tc });
                advance(1, &mut i, &mut col);
            }
            c if is_ident_start(c) => {
                let mut j = i;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                out.push(Spanned { tok: Tok::Ident(name), line: tl, col: tc });
                let n = j - i;
                advance(n, &mut i, &mut col);
            }
            other => bail!(tl, tc, "unexpected character `{}`", other),
        }
    }
    Ok(out)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Cursor over scanned tokens with positions for error reporting.
pub(crate) struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
    eof: (usize, usize),
}

impl Cursor {
    pub fn new(toks: Vec<Spanned>, src: &str) -> Self {
        let line = src.lines().count().max(1);
        let col = src.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
        Cursor { toks, pos: 0, eof: (line, col) }
    }

    pub fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline)) {
            self.pos += 1;
        }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|s| &s.tok)
    }

    pub fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.eof)
    }

    pub fn error(&self, msg: impl Into<String>) -> GrammarError {
        let (line, col) = self.here();
        GrammarError::Syntax { line, col, msg: msg.into() }
    }

    pub fn expect_ident(&mut self, what: &str) -> Result<String, GrammarError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn expect(&mut self, tok: Tok, what: &str) -> Result<(), GrammarError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }
}
