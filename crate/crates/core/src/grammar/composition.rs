//! Composition files: which languages may be embedded where.
//!
//! ```text
//! outer MiniJava;
//! inner MiniSQL = MiniSQL;
//! inner MiniHTML = MiniHTML allow TAG_OPEN, TAG_VOID;
//! ```

use std::collections::HashMap;
use std::path::Path;

use super::scan::{tokenize, Cursor, Tok};
use super::spec::literal_name;
use super::{GrammarError, Language};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hint {
    Allow(Vec<String>),
    Deny(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub lbox: String,
    pub lang: String,
    pub hint: Option<Hint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSpec {
    pub outer: String,
    pub members: Vec<Member>,
}

impl CompositionSpec {
    pub fn hint(&self, lang: &str) -> Option<&Hint> {
        self.members.iter().find(|m| m.lang == lang).and_then(|m| m.hint.as_ref())
    }

    /// Language ids in load order: outer first, then members.
    pub fn language_ids(&self) -> Vec<String> {
        let mut ids = vec![self.outer.clone()];
        for m in &self.members {
            if !ids.contains(&m.lang) {
                ids.push(m.lang.clone());
            }
        }
        ids
    }
}

pub fn parse_composition(text: &str) -> Result<CompositionSpec, GrammarError> {
    let mut cur = Cursor::new(tokenize(text)?, text);
    let mut outer = None;
    let mut members: Vec<Member> = Vec::new();
    loop {
        cur.skip_newlines();
        let Some(tok) = cur.next() else { break };
        match tok {
            Tok::Ident(kw) if kw == "outer" => {
                if outer.is_some() {
                    return Err(cur.error("duplicate `outer` declaration"));
                }
                outer = Some(cur.expect_ident("language id")?);
            }
            Tok::Ident(kw) if kw == "inner" => {
                let lbox = match cur.next() {
                    Some(Tok::Ident(n)) | Some(Tok::LBox(n)) => n,
                    _ => return Err(cur.error("expected language box name")),
                };
                cur.expect(Tok::Equals, "`=`")?;
                let lang = cur.expect_ident("language id")?;
                let hint = match cur.peek() {
                    Some(Tok::Ident(k)) if k == "allow" || k == "deny" => {
                        let allow = k == "allow";
                        cur.next();
                        let mut types = vec![hint_type(&mut cur)?];
                        while cur.peek() == Some(&Tok::Comma) {
                            cur.next();
                            types.push(hint_type(&mut cur)?);
                        }
                        Some(if allow { Hint::Allow(types) } else { Hint::Deny(types) })
                    }
                    _ => None,
                };
                if members.iter().any(|m| m.lbox == lbox) {
                    return Err(GrammarError::Composition(format!("`<{lbox}>` mapped twice")));
                }
                if matches!(cur.peek(), Some(Tok::Ident(k)) if k == "allow" || k == "deny") {
                    return Err(GrammarError::Composition(format!(
                        "`{lbox}` has both an allow-list and a deny-list"
                    )));
                }
                members.push(Member { lbox, lang, hint });
            }
            _ => return Err(cur.error("expected `outer` or `inner`")),
        }
        match cur.peek() {
            None | Some(Tok::Newline) => {}
            Some(Tok::Semi) => {
                cur.next();
            }
            _ => return Err(cur.error("expected `;`")),
        }
    }
    let outer = outer.ok_or_else(|| GrammarError::Composition("missing `outer` declaration".into()))?;
    Ok(CompositionSpec { outer, members })
}

fn hint_type(cur: &mut Cursor) -> Result<String, GrammarError> {
    match cur.next() {
        Some(Tok::Ident(t)) => Ok(t),
        Some(Tok::Literal(l)) => Ok(literal_name(&l)),
        _ => Err(cur.error("expected token type")),
    }
}

/// True iff no hint exists for `lang`, or the allow-list contains the type,
/// or the deny-list does not.
pub fn hint_allows(c: &CompositionSpec, lang: &str, first_token_type: &str) -> bool {
    match c.hint(lang) {
        None => true,
        Some(Hint::Allow(types)) => types.iter().any(|t| t == first_token_type),
        Some(Hint::Deny(types)) => !types.iter().any(|t| t == first_token_type),
    }
}

/// A loaded composition with compiled languages.
#[derive(Debug)]
pub struct Composition {
    pub id: String,
    pub spec: CompositionSpec,
    pub langs: Vec<Language>,
    /// Per language: `(lbox terminal in that grammar, embedded language)`.
    pub embeds: Vec<Vec<(u32, usize)>>,
    /// Per language, the hint as a membership table over its terminals.
    hints: Vec<Option<(bool, Vec<bool>)>>,
}

impl Composition {
    /// Loads `path` and the grammar files `<dir>/<lang id>.grammar` beside it.
    pub fn load(path: impl AsRef<Path>) -> Result<Composition, GrammarError> {
        let path = path.as_ref();
        let read = |p: &Path| {
            std::fs::read_to_string(p)
                .map_err(|e| GrammarError::Io { path: p.display().to_string(), source: e })
        };
        let text = read(path)?;
        let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Composition::from_sources(&id, &text, |lang| {
            let gpath = dir.join(format!("{lang}.grammar"));
            read(&gpath).map(|t| (t, gpath.display().to_string()))
        })
    }

    /// Builds a composition, fetching each grammar's text and a display name.
    pub fn from_sources<F>(id: &str, text: &str, mut grammar: F) -> Result<Composition, GrammarError>
    where
        F: FnMut(&str) -> Result<(String, String), GrammarError>,
    {
        let spec = parse_composition(text)?;
        let mut langs = Vec::new();
        for lid in spec.language_ids() {
            let (src, origin) = grammar(&lid)?;
            let lang = Language::from_source(&lid, &src)
                .map_err(|e| GrammarError::InFile { path: origin, source: Box::new(e) })?;
            langs.push(lang);
        }
        Composition::build(id, spec, langs)
    }

    pub fn build(id: &str, spec: CompositionSpec, langs: Vec<Language>) -> Result<Composition, GrammarError> {
        let index: HashMap<&str, usize> =
            langs.iter().enumerate().map(|(i, l)| (l.id.as_str(), i)).collect();
        let outer = *index
            .get(spec.outer.as_str())
            .ok_or_else(|| GrammarError::Composition(format!("unknown language `{}`", spec.outer)))?;
        if outer != 0 {
            return Err(GrammarError::Composition("outer language must be loaded first".into()));
        }
        let mut embeds = Vec::new();
        for lang in &langs {
            let mut e = Vec::new();
            for (term, name) in &lang.grammar.lboxes {
                match spec.members.iter().find(|m| &m.lbox == name) {
                    Some(m) => {
                        let target = *index.get(m.lang.as_str()).ok_or_else(|| {
                            GrammarError::Composition(format!("unknown language `{}`", m.lang))
                        })?;
                        e.push((*term, target));
                    }
                    None if lang.id == spec.outer => {
                        return Err(GrammarError::Composition(format!(
                            "`<{name}>` in `{}` has no inner declaration",
                            lang.id
                        )))
                    }
                    None => {}
                }
            }
            embeds.push(e);
        }
        let mut hints = Vec::new();
        for lang in &langs {
            hints.push(match spec.hint(&lang.id) {
                None => None,
                Some(h) => {
                    let (allow, types) = match h {
                        Hint::Allow(t) => (true, t),
                        Hint::Deny(t) => (false, t),
                    };
                    let mut table = vec![false; lang.grammar.terminals.len()];
                    for t in types {
                        let term = lang.grammar.terminal(t).ok_or_else(|| {
                            GrammarError::Composition(format!("hint names unknown token `{t}` of `{}`", lang.id))
                        })?;
                        table[term as usize] = true;
                    }
                    Some((allow, table))
                }
            });
        }
        Ok(Composition { id: id.to_string(), spec, langs, embeds, hints })
    }

    pub fn outer(&self) -> &Language {
        &self.langs[0]
    }

    pub fn lang_index(&self, id: &str) -> Option<usize> {
        self.langs.iter().position(|l| l.id == id)
    }

    /// Fast form of [`hint_allows`] on terminal ids.
    pub fn hint_allows_term(&self, lang: usize, term: u32) -> bool {
        match &self.hints[lang] {
            None => true,
            Some((allow, table)) => table.get(term as usize).copied().unwrap_or(false) == *allow,
        }
    }

    /// The lbox terminal for embedding `inner` in `outer`, if allowed.
    pub fn lbox_for(&self, outer: usize, inner: usize) -> Option<u32> {
        self.embeds[outer].iter().find(|(_, l)| *l == inner).map(|(t, _)| *t)
    }

    pub fn lang_of_lbox(&self, outer: usize, term: u32) -> Option<usize> {
        self.embeds[outer].iter().find(|(t, _)| *t == term).map(|(_, l)| *l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_members_and_hints() {
        let c = parse_composition(
            "outer MiniJS;\ninner MiniHTML = MiniHTML allow TAG_OPEN, TAG_VOID;\ninner Sql = MiniSQL deny \"(\";\n",
        )
        .unwrap();
        assert_eq!(c.outer, "MiniJS");
        assert_eq!(c.members.len(), 2);
        assert_eq!(c.members[0].hint, Some(Hint::Allow(vec!["TAG_OPEN".into(), "TAG_VOID".into()])));
        assert_eq!(c.members[1].hint, Some(Hint::Deny(vec!["\"(\"".into()])));
        assert_eq!(c.language_ids(), vec!["MiniJS", "MiniHTML", "MiniSQL"]);
    }

    #[test]
    fn hint_semantics() {
        let c = parse_composition("outer A;\ninner H = H allow TAG_OPEN;\ninner S = S deny IDENT;\ninner L = L;").unwrap();
        assert!(hint_allows(&c, "H", "TAG_OPEN"));
        assert!(!hint_allows(&c, "H", "IDENT"));
        assert!(!hint_allows(&c, "S", "IDENT"));
        assert!(hint_allows(&c, "S", "NUM"));
        assert!(hint_allows(&c, "L", "anything"));
    }

    #[test]
    fn rejects_both_lists() {
        let err = parse_composition("outer A;\ninner H = H allow X deny Y;").unwrap_err();
        assert!(err.to_string().contains("both"));
    }

    #[test]
    fn outer_lbox_symbols_need_members() {
        let err = Composition::from_sources("c", "outer A;", |_| {
            Ok((r#"S: "a" | <B>;"#.to_string(), "A.grammar".to_string()))
        })
        .unwrap_err();
        assert!(err.to_string().contains("<B>"));
    }
}
