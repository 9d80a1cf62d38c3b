mod common;

use autobox_core::engine::shape::{batch_shape, tree_shape};
use autobox_core::engine::{flag, Document, Kind};
use proptest::prelude::*;

const JAVA_BASE: &str = "class A {\n  int x = 1, y;\n  void f(int a) {\n    int z = a + 2 * 3; // note\n    if (z < 4) { return; } else { z = g(z, \"s\"); }\n    while (a > 0) { a = a - 1; }\n  }\n}\n";
const SQL_BASE: &str = "SELECT a, min(b) AS m FROM t u WHERE a = 1 AND b < 2 OR c";

const JAVA_SNIPPETS: &[&str] = &[
    "x", "1", " ", "\n", ";", "(", ")", "{", "}", "=", "+", "*", ",", "/", "//", "\"", "int ", "return ", "if (a) { }",
    "SELECT", "y = 2;", "q", "ab", ".", "!", "<", "while", "-",
];
const SQL_SNIPPETS: &[&str] = &[
    "a", "1", " ", ",", "(", ")", "*", "+", "=", "SELECT", "FROM", "WHERE", "AND", "x.y", "'s'", "AS", "\n", "OR",
];

#[derive(Debug, Clone)]
struct Edit {
    pos: f64,
    del: usize,
    ins: usize,
}

fn edits() -> impl Strategy<Value = Vec<Edit>> {
    prop::collection::vec(
        (0.0f64..=1.0, prop_oneof![Just(0usize), 1usize..4], 0usize..40).prop_map(|(pos, del, ins)| Edit { pos, del, ins }),
        1..25,
    )
}

/// Applies an edit to both the document and the shadow text, returning
/// the inverse edit.
fn apply(doc: &mut Document, shadow: &mut String, e: &Edit, snippets: &[&str]) -> (usize, usize, String) {
    let root = doc.root();
    let mut pos = ((shadow.len() as f64) * e.pos) as usize;
    while !shadow.is_char_boundary(pos) {
        pos -= 1;
    }
    let del = e.del.min(shadow.len() - pos);
    let ins = if e.ins < snippets.len() { snippets[e.ins] } else { "" };
    let removed = shadow[pos..pos + del].to_string();
    doc.edit(root, pos, del, ins);
    shadow.replace_range(pos..pos + del, ins);
    (pos, ins.len(), removed)
}

fn check(doc: &Document, shadow: &str) {
    assert_eq!(doc.text_all(), shadow, "frontier differs from shadow text");
    doc.validate().unwrap();
    let root = doc.root();
    let lang = doc.language(root);
    let lexed: Vec<(u32, String)> = lang.lex(shadow).into_iter().map(|(t, a, b)| (t, shadow[a..b].to_string())).collect();
    let leaves: Vec<(u32, String)> = doc
        .leaves(root)
        .into_iter()
        .filter(|&n| doc.kind(n) == Kind::Token)
        .map(|n| (doc.sym(n), doc.text(n).to_string()))
        .collect();
    assert_eq!(leaves, lexed, "incremental tokens differ from batch lexing");
    let batch = batch_shape(lang, shadow);
    assert_eq!(doc.has(root, flag::ACCEPTED), batch.is_some(), "acceptance differs for {shadow:?}");
    if let Some(b) = batch {
        assert_eq!(tree_shape(doc, root), b, "tree differs from batch parse for {shadow:?}");
        assert!(doc.error_nodes().is_empty());
    } else {
        assert!(!doc.error_nodes().is_empty(), "rejected document without error marks: {shadow:?}");
    }
}

fn run_script(comp: &str, base: &str, snippets: &[&str], script: &[Edit]) {
    let mut doc = Document::new(common::comp(comp), base);
    let mut shadow = base.to_string();
    check(&doc, &shadow);
    let mut inverses = Vec::new();
    for e in script {
        inverses.push(apply(&mut doc, &mut shadow, e, snippets));
        check(&doc, &shadow);
    }
    for (pos, len, text) in inverses.into_iter().rev() {
        doc.edit(doc.root(), pos, len, &text);
        shadow.replace_range(pos..pos + len, &text);
        check(&doc, &shadow);
    }
    assert_eq!(shadow, base);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn java_edit_scripts_match_batch(script in edits()) {
        run_script("java_sql", JAVA_BASE, JAVA_SNIPPETS, &script);
    }

    #[test]
    fn sql_edit_scripts_match_batch(script in edits()) {
        run_script("sql_lua", SQL_BASE, SQL_SNIPPETS, &script);
    }
}

#[test]
fn typing_a_program_from_nothing() {
    let mut doc = Document::new(common::comp("java_sql"), "");
    let mut shadow = String::new();
    for (i, ch) in JAVA_BASE.char_indices() {
        doc.edit(doc.root(), i, 0, &ch.to_string());
        shadow.push(ch);
        check(&doc, &shadow);
    }
}

#[test]
fn deleting_a_program_from_the_end() {
    let mut doc = Document::new(common::comp("java_sql"), JAVA_BASE);
    let mut shadow = JAVA_BASE.to_string();
    while !shadow.is_empty() {
        let n = shadow.len() - 1;
        doc.edit(doc.root(), n, 1, "");
        shadow.pop();
        check(&doc, &shadow);
    }
}

#[test]
fn old_versions_read_back_unchanged() {
    let mut doc = Document::new(common::comp("java_sql"), JAVA_BASE);
    let mut texts = vec![(doc.version(), JAVA_BASE.to_string())];
    let mut shadow = JAVA_BASE.to_string();
    for (i, ins) in ["z", "(", " ", "}", "//"].iter().enumerate() {
        let pos = 10 + i * 17;
        doc.edit(doc.root(), pos, 1, ins);
        shadow.replace_range(pos..pos + 1, ins);
        texts.push((doc.version(), shadow.clone()));
    }
    for (v, text) in texts {
        let mut got = String::new();
        let mut stack = vec![doc.root()];
        while let Some(n) = stack.pop() {
            if doc.kind(n) == Kind::Token {
                got.push_str(doc.text_at(n, v));
            }
            stack.extend(doc.children_at(n, v).iter().rev());
        }
        assert_eq!(got, text, "version {v}");
    }
}
