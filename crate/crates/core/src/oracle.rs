//! Reference checks comparing the incremental machinery with computation
//! from scratch, plus small random workloads to drive them. Shared by the
//! test suites and the acceptance runner.

use rand::Rng;

use crate::engine::shape::{batch_prefix_ends, batch_shape, batch_states, tree_shape};
use crate::engine::{flag, Document, Kind, NodeId};
use crate::grammar::Composition;

/// Seed text and edit snippets for randomised scripts in one outer
/// language.
#[derive(Debug, Clone, Copy)]
pub struct Workload {
    pub base: &'static str,
    pub snippets: &'static [&'static str],
}

pub const JAVA: Workload = Workload {
    base: "class A {\n  int x = 1, y;\n  void f(int a) {\n    int z = a + 2 * 3; // note\n    if (z < 4) { return; } else { z = g(z, \"s\"); }\n    while (a > 0) { a = a - 1; }\n  }\n}\n",
    snippets: &[
        "x", "1", " ", "\n", ";", "(", ")", "{", "}", "=", "+", "*", ",", "/", "//", "\"", "int ", "return ",
        "if (a) { }", "SELECT", "y = 2;", "q", "ab", ".", "!", "<", "while", "-", "SELECT a FROM t", " FROM ",
        "min(b)", "WHERE", "AND",
    ],
};

pub const SQL: Workload = Workload {
    base: "SELECT a, min(b) AS m FROM t u WHERE a = 1 AND b < 2 OR c",
    snippets: &[
        "a", "1", " ", ",", "(", ")", "*", "+", "=", "SELECT", "FROM", "WHERE", "AND", "x.y", "'s'", "AS", "\n", "OR",
        "local", "x = 1", "end", "f(x)",
    ],
};

pub const LUA: Workload = Workload {
    base: "local n = 1\nfunction f(a, b)\n  if a < b then return a else return b end\nend\nx = f(n, 2) .. \"s\"\nwhile n < 3 do n = n + 1 end\n",
    snippets: &[
        "a", "1", " ", "\n", "=", "(", ")", ",", "+", "*", "..", "end", "local ", "then", "do", "SELECT", "FROM",
        "SELECT a, b FROM t", "WHERE", "{", "}", "'q'", "--",
    ],
};

pub const JS: Workload = Workload {
    base: "var a = 1;\nfunction f(x, y) {\n  if (x < y) { return x; }\n  return [x, y];\n}\nvar s = f(a, 2) + \"t\";\n",
    snippets: &[
        "a", "1", " ", "\n", ";", "=", "(", ")", "{", "}", "+", "<", ">", "<div>", "</div>", "<br/>", "hello",
        "<p class=\"c\">", "</p>", "var ", "//", "[", "]", "\"",
    ],
};

/// The workload for a composition's outer language.
pub fn workload_for(comp: &Composition) -> Workload {
    match comp.outer().id.as_str() {
        "MiniJava" => JAVA,
        "MiniSQL" => SQL,
        "MiniLua" => LUA,
        _ => JS,
    }
}

/// A random edit of `text`: byte position, bytes to delete, insertion.
pub fn random_edit<R: Rng>(rng: &mut R, text: &str, w: &Workload) -> (usize, usize, String) {
    let mut pos = rng.gen_range(0..=text.len());
    while !text.is_char_boundary(pos) {
        pos -= 1;
    }
    let mut del = if rng.gen_bool(0.4) { rng.gen_range(1..4) } else { 0 }.min(text.len() - pos);
    while !text.is_char_boundary(pos + del) {
        del -= 1;
    }
    let ins = if del > 0 && rng.gen_bool(0.3) { "" } else { w.snippets[rng.gen_range(0..w.snippets.len())] };
    (pos, del, ins.to_string())
}

/// Compares the outer tree with lexing and parsing `shadow` from scratch:
/// frontier, token stream, acceptance, error marks and, when accepted,
/// tree shape.
pub fn check_against_batch(doc: &Document, shadow: &str) -> Result<(), String> {
    if doc.text_all() != shadow {
        return Err(format!("frontier differs from shadow text {shadow:?}"));
    }
    doc.validate()?;
    let root = doc.root();
    let lang = doc.language(root);
    let lexed: Vec<(u32, &str)> = lang.lex(shadow).into_iter().map(|(t, a, b)| (t, &shadow[a..b])).collect();
    let leaves: Vec<(u32, &str)> = doc
        .leaves(root)
        .into_iter()
        .filter(|&n| doc.kind(n) == Kind::Token)
        .map(|n| (doc.sym(n), doc.text(n)))
        .collect();
    if leaves != lexed {
        return Err(format!("incremental tokens differ from batch lexing of {shadow:?}"));
    }
    let batch = batch_shape(lang, shadow);
    if doc.has(root, flag::ACCEPTED) != batch.is_some() {
        return Err(format!("acceptance differs for {shadow:?}"));
    }
    match batch {
        Some(b) if tree_shape(doc, root) != b => Err(format!("tree differs from batch parse for {shadow:?}")),
        Some(_) if !doc.error_nodes().is_empty() => Err(format!("accepted document with error marks: {shadow:?}")),
        None if doc.error_nodes().is_empty() => Err(format!("rejected document without error marks: {shadow:?}")),
        _ => Ok(()),
    }
}

/// Applies `edits` random edits one by one, checking after each, then
/// undoes them in reverse with inverse edits. Returns how many states
/// along the way were accepted documents.
pub fn run_edit_script<R: Rng>(doc: &mut Document, w: &Workload, rng: &mut R, edits: usize) -> Result<usize, String> {
    let mut shadow = doc.text_all();
    let base = shadow.clone();
    let mut inverses = Vec::new();
    let mut accepted = 0;
    for _ in 0..edits {
        let (pos, del, ins) = random_edit(rng, &shadow, w);
        let removed = shadow[pos..pos + del].to_string();
        doc.edit(doc.root(), pos, del, &ins);
        shadow.replace_range(pos..pos + del, &ins);
        check_against_batch(doc, &shadow)?;
        accepted += doc.has(doc.root(), flag::ACCEPTED) as usize;
        inverses.push((pos, ins.len(), removed));
    }
    for (pos, len, text) in inverses.into_iter().rev() {
        doc.edit(doc.root(), pos, len, &text);
        shadow.replace_range(pos..pos + len, &text);
        check_against_batch(doc, &shadow)?;
    }
    if shadow != base {
        return Err("inverse edits did not restore the base text".into());
    }
    Ok(accepted)
}

/// A document built from the workload's base by a few random edits.
pub fn random_document<R: Rng>(comp: &std::sync::Arc<Composition>, w: &Workload, rng: &mut R, edits: usize) -> Document {
    let mut doc = Document::new(comp.clone(), w.base);
    let mut text = w.base.to_string();
    for _ in 0..edits {
        let (pos, del, ins) = random_edit(rng, &text, w);
        doc.edit(doc.root(), pos, del, &ins);
        text.replace_range(pos..pos + del, &ins);
    }
    doc
}

fn solid_tokens(doc: &Document, root: NodeId) -> Vec<NodeId> {
    doc.leaves(root).into_iter().filter(|&n| doc.kind(n) == Kind::Token && !doc.is_whitespace_leaf(n)).collect()
}

/// One recogniser check: a random start token and language in `doc`.
/// Returns the number of candidate ends found.
pub fn check_recogniser<R: Rng>(doc: &Document, rng: &mut R) -> Result<usize, String> {
    let root = doc.root();
    let comp = doc.composition();
    let toks = solid_tokens(doc, root);
    if toks.is_empty() {
        return Ok(0);
    }
    let likely: Vec<NodeId> = toks
        .iter()
        .copied()
        .filter(|&n| ["SELECT", "<", "local", "x", "a", "f"].iter().any(|p| doc.text(n).starts_with(p)))
        .collect();
    let pool = if !likely.is_empty() && rng.gen_bool(0.5) { &likely } else { &toks };
    let start = doc.offset(pool[rng.gen_range(0..pool.len())]);
    let lang = rng.gen_range(0..comp.langs.len());
    let text = doc.text_all();
    let got = doc.recognise_at(root, start, lang).ends;
    let want: Vec<usize> =
        batch_prefix_ends(comp, lang, &text[start..], usize::MAX).into_iter().map(|e| e + start).collect();
    if got != want {
        return Err(format!(
            "recogniser for {} from {start} in {text:?}: got {got:?}, want {want:?}",
            comp.langs[lang].id
        ));
    }
    Ok(got.len())
}

/// One stack recreation check: after a relex-only edit of an accepted
/// document, the states rebuilt before a random token must equal a batch
/// parse of the tokens before it. Returns false when the text before the
/// token does not parse, so there is nothing to compare.
pub fn check_recreation<R: Rng>(comp: &std::sync::Arc<Composition>, w: &Workload, rng: &mut R) -> Result<bool, String> {
    let mut doc = Document::new(comp.clone(), w.base);
    let (pos, del, ins) = random_edit(rng, w.base, w);
    let root = doc.root();
    doc.apply_edit(root, pos, del, &ins);
    let lang = doc.language(root);
    let mut terms: Vec<(NodeId, u32)> = solid_tokens(&doc, root).into_iter().map(|n| (n, doc.sym(n))).collect();
    terms.push((doc.eos(root), doc.sym(doc.eos(root))));
    let i = rng.gen_range(0..terms.len());
    let (target, sym) = terms[i];
    let prefix: Vec<u32> = terms[..i].iter().map(|t| t.1).collect();
    let Some(mut want) = batch_states(lang, &prefix) else { return Ok(false) };
    let Some(mut got) = doc.recreate_states(root, target, doc.version()) else {
        return Err(format!("no states recreated before token {i} of {:?}", doc.text_all()));
    };
    let a = lang.tables.reduce_for(&mut want, sym);
    let b = lang.tables.reduce_for(&mut got, sym);
    if want != got || a != b {
        return Err(format!("states before token {i} of {:?}: got {got:?}, want {want:?}", doc.text_all()));
    }
    Ok(true)
}
