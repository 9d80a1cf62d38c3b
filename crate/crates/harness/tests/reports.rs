use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use autobox_core::autobox::{BoxState, BoxView, Config, Decision, Heuristic, Snapshot};
use autobox_core::grammar::Composition;
use autobox_harness::report::{acceptable_table, category_table, percent, Record};
use autobox_harness::{classify, run_test, Category, TestCase};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn java_sql() -> Arc<Composition> {
    Arc::new(Composition::load(fixtures().join("languages/java_sql.composition")).unwrap())
}

const BASE: &str = "class A {\n  void f() {\n    int x = 0;\n  }\n}\n";

fn case(fragment: &str) -> TestCase {
    TestCase {
        base_file: "unused".into(),
        offset: 35,
        span: 1,
        fragment: fragment.into(),
        composition: "java_sql".into(),
        expected: None,
    }
}

#[test]
fn sql_in_an_expression_hole_is_a_complete_insertion() {
    let o = run_test(java_sql(), BASE, &case("SELECT a FROM t"), Config::default(), 0).unwrap();
    assert_eq!(o.category, Category::CompleteInsertion);
    assert_eq!(o.box_span, 15);
    assert_eq!(o.per_keypress_times.len(), 15);
    assert!(o.error_positions.is_empty());
}

#[test]
fn outer_valid_fragment_inserts_nothing() {
    let o = run_test(java_sql(), BASE, &case("x + 1"), Config::default(), 0).unwrap();
    assert_eq!(o.category, Category::NoInsertionValid);
    assert_eq!(o.box_span, 0);
}

#[test]
fn bad_tests_are_rejected() {
    assert!(run_test(java_sql(), BASE, &case(""), Config::default(), 0).is_err());
    let mut t = case("x");
    t.offset = 60;
    assert!(run_test(java_sql(), BASE, &t, Config::default(), 3).is_err());
}

fn snap(boxes: &[(usize, usize)], errors: &[usize]) -> Snapshot {
    Snapshot {
        text: String::new(),
        cursor: 0,
        boxes: boxes
            .iter()
            .enumerate()
            .map(|(i, &(start, end))| BoxView { id: i as u32, start, end, lang: "L".into(), state: BoxState::Uncommitted })
            .collect(),
        errors: errors.to_vec(),
        candidates: vec![],
    }
}

#[test]
fn classification_covers_each_category() {
    let none = Decision::None;
    assert_eq!(classify(&snap(&[(10, 20)], &[]), &none, 10, 10), Category::CompleteInsertion);
    assert_eq!(classify(&snap(&[(10, 15)], &[]), &none, 10, 10), Category::PartialInsertionNoErrors);
    assert_eq!(classify(&snap(&[(10, 15)], &[30]), &none, 10, 10), Category::PartialInsertionErrors);
    assert_eq!(classify(&snap(&[(10, 20)], &[30]), &none, 10, 10), Category::PartialInsertionErrors);
    assert_eq!(classify(&snap(&[], &[]), &none, 10, 10), Category::NoInsertionValid);
    assert_eq!(classify(&snap(&[], &[12]), &none, 10, 10), Category::NoInsertionErrors);
    assert_eq!(classify(&snap(&[], &[12]), &Decision::Present, 10, 10), Category::NoInsertionMulti);
    let acceptable: Vec<bool> = Category::EVERY.iter().map(|c| c.acceptable()).collect();
    assert_eq!(acceptable, [true, true, false, true, false, true]);
}

#[test]
fn percentages_round_half_up() {
    assert_eq!(percent(1, 8), "12.5");
    assert_eq!(percent(1, 16), "6.3");
    assert_eq!(percent(2, 3), "66.7");
    assert_eq!(percent(0, 7), "0.0");
    assert_eq!(percent(7, 7), "100.0");
}

fn rec(index: usize, comp: &str, category: Category) -> Record {
    Record { index, composition: comp.into(), category, box_span: 0, errors: vec![], expected: None }
}

#[test]
fn tables_have_counts_and_no_blank_cells() {
    let rs = vec![
        rec(0, "a", Category::CompleteInsertion),
        rec(1, "a", Category::NoInsertionErrors),
        rec(2, "b", Category::NoInsertionValid),
    ];
    let runs = vec![(Heuristic::All, rs)];
    let t = acceptable_table(&runs);
    assert_eq!(t.to_csv(), ",a,b,Overall\n# Tests,2,1,3\nAll,50.0,100.0,66.7\n");
    let c = category_table(&runs);
    assert_eq!(c.rows[0], ["All", "33.3", "0.0", "0.0", "33.3", "33.3", "0.0"]);
    assert!(c.to_text().lines().all(|l| !l.ends_with(' ')));
}

fn write_manifest(dir: &Path, fragments: &[&str]) -> PathBuf {
    fs::write(dir.join("base.java"), BASE).unwrap();
    let tests: Vec<TestCase> = fragments
        .iter()
        .map(|f| TestCase { base_file: "base.java".into(), ..case(f) })
        .collect();
    let path = dir.join("tests.json");
    fs::write(&path, serde_json::to_string(&tests).unwrap()).unwrap();
    path
}

fn cli(manifest: &Path, report: &Path, extra: &[&str]) -> std::process::Output {
    let comp = fixtures().join("languages/java_sql.composition");
    Command::new(env!("CARGO_BIN_EXE_autobox"))
        .args(["run", "--composition", comp.to_str().unwrap(), "--tests", manifest.to_str().unwrap()])
        .args(["--report-dir", report.to_str().unwrap()])
        .args(extra)
        .output()
        .unwrap()
}

#[test]
fn exit_code_reflects_unacceptable_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_manifest(dir.path(), &["SELECT a FROM t", "x + 1"]);
    let out = cli(&good, &dir.path().join("r1"), &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for f in ["acceptable.csv", "acceptable.txt", "categories.csv", "categories.txt", "outcomes-all.ndjson"] {
        assert!(dir.path().join("r1").join(f).exists(), "{f}");
    }

    let bad = write_manifest(dir.path(), &["SELECT a FROM t", "x +"]);
    assert_eq!(cli(&bad, &dir.path().join("r2"), &[]).status.code(), Some(1));
    assert!(cli(&bad, &dir.path().join("r3"), &["--no-fail"]).status.success());
    let out = cli(&bad, &dir.path().join("r4"), &["--timing", "--no-fail", "--heuristic", "stack"]);
    assert!(out.status.success());
    let timing = fs::read_to_string(dir.path().join("r4/timing-stack.csv")).unwrap();
    assert_eq!(timing.lines().count(), 3);
}

#[test]
fn unknown_composition_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("base.java"), BASE).unwrap();
    let t = vec![TestCase { base_file: "base.java".into(), composition: "nope".into(), ..case("x") }];
    let m = dir.path().join("t.json");
    fs::write(&m, serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(cli(&m, &dir.path().join("r"), &[]).status.code(), Some(2));
}
