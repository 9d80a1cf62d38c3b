mod common;

use autobox_core::autobox::{BoxState, Config, Decision, Heuristic, Session};

const METHOD: &str = "class A {\n  void f() {\n    int x = \n  }\n}\n";
const METHOD_SEMI: &str = "class A {\n  void f() {\n    int x = ;\n  }\n}\n";
const HOLE: usize = 35;

fn java(base: &str) -> Session {
    let mut s = Session::new(common::comp("java_sql"), base, Config::default());
    s.move_to(HOLE).unwrap();
    s
}

fn spans(s: &Session) -> Vec<(usize, usize)> {
    s.snapshot().boxes.iter().map(|b| (b.start, b.end)).collect()
}

fn type_all(s: &mut Session, text: &str) -> Vec<(char, &'static str)> {
    text.chars().map(|c| (c, s.key(&c.to_string()).name())).collect()
}

#[test]
fn running_example_inserts_then_grows() {
    let mut s = java(METHOD);
    let steps = type_all(&mut s, "SELECT min");
    assert!(steps.iter().all(|(_, d)| *d == "none"), "{steps:?}");
    let at_min = s.snapshot();
    assert!(at_min.errors.contains(&(HOLE + 7)), "error expected at `min`: {:?}", at_min.errors);

    let steps = type_all(&mut s, "(a)");
    assert!(steps.iter().all(|(_, d)| *d == "none"));
    assert!(matches!(s.key(","), Decision::Insert(_)));
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 13)]);

    let steps = type_all(&mut s, " b FROM t");
    assert!(steps.iter().all(|(_, d)| *d == "none"), "{steps:?}");
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 13)]);
    assert!(matches!(s.key(";"), Decision::Resize(_)));
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 23)]);
    assert!(s.snapshot().errors.is_empty());

    let steps = type_all(&mut s, "\n    int y = x + 1;");
    assert!(steps.iter().all(|(_, d)| *d == "none"), "{steps:?}");
    let snap = s.snapshot();
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 23)]);
    assert!(snap.errors.is_empty());
    assert_eq!(snap.boxes[0].lang, "MiniSQL");
    assert_eq!(snap.boxes[0].state, BoxState::Uncommitted);
}

#[test]
fn typing_into_a_box_can_make_it_outer_text_again() {
    let mut s = java(METHOD_SEMI);
    let steps = type_all(&mut s, "SELECT * FROM b");
    assert_eq!(steps.last().unwrap().1, "insert");
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 15)]);
    // Before `b`, still inside the box.
    s.move_to(HOLE + 14).unwrap();
    assert_eq!(s.snapshot().boxes[0].state, BoxState::Uncommitted);
    assert!(matches!(s.key("*"), Decision::Remove(_)));
    let snap = s.snapshot();
    assert!(snap.boxes.is_empty());
    assert!(snap.errors.is_empty());
    assert_eq!(&snap.text[HOLE..HOLE + 17], "SELECT * FROM *b;");
}

#[test]
fn backspace_after_insertion_removes_the_box() {
    let mut s = java(METHOD_SEMI);
    let steps = type_all(&mut s, "SELECT * FROM t");
    assert_eq!(steps.last().unwrap().1, "insert");
    assert!(matches!(s.backspace(), Decision::Remove(_)));
    let snap = s.snapshot();
    assert!(snap.boxes.is_empty());
    assert!(snap.errors.is_empty());
}

#[test]
fn ambiguous_paste_presents_candidates_without_changing_anything() {
    let mut s = java(METHOD_SEMI);
    let version = s.document().version();
    assert_eq!(s.key("SELECT a FROM t WHERE b + c"), Decision::Present);
    let snap = s.snapshot();
    assert!(snap.boxes.is_empty());
    let c: Vec<(usize, usize)> = snap.candidates.iter().map(|c| (c.start, c.end)).collect();
    assert_eq!(c, vec![(HOLE, HOLE + 23), (HOLE, HOLE + 27)]);
    assert!(s.document().version() > version);
    assert!(matches!(s.choose(1), Ok(Decision::Insert(_))));
    let snap = s.snapshot();
    assert_eq!(spans(&s), vec![(HOLE, HOLE + 27)]);
    assert!(snap.candidates.is_empty());
    assert!(snap.errors.is_empty());
}

#[test]
fn undone_insertion_is_not_repeated() {
    let mut s = java(METHOD);
    type_all(&mut s, "SELECT min(a)");
    assert!(matches!(s.key(","), Decision::Insert(_)));
    assert!(s.undo());
    let snap = s.snapshot();
    assert!(snap.boxes.is_empty());
    assert!(snap.text.contains("SELECT min(a),"));
    for _ in 0..3 {
        assert_eq!(s.backspace().name(), "none");
        assert_eq!(s.key(",").name(), "none");
        assert!(s.snapshot().boxes.is_empty());
    }
}

#[test]
fn moving_out_of_a_box_commits_it() {
    let mut s = java(METHOD_SEMI);
    type_all(&mut s, "SELECT * FROM t");
    let id = s.snapshot().boxes[0].id;
    s.move_to(HOLE + 15).unwrap();
    assert_eq!(s.snapshot().boxes[0].state, BoxState::Uncommitted);
    s.move_to(0).unwrap();
    assert_eq!(s.snapshot().boxes[0].state, BoxState::Committed);
    // Committed boxes are left alone.
    s.move_to(HOLE + 15).unwrap();
    assert_eq!(s.backspace().name(), "none");
    assert_eq!(s.snapshot().boxes.len(), 1);
    s.mark_uncommitted(id).unwrap();
    assert_eq!(s.backspace().name(), "remove");
    assert!(s.mark_uncommitted(id).is_err());
}

#[test]
fn single_heuristics_also_find_the_running_example() {
    for h in [Heuristic::ParseTree, Heuristic::Stack, Heuristic::Line] {
        let cfg = Config { heuristic: h, ..Config::default() };
        let mut s = Session::new(common::comp("java_sql"), METHOD_SEMI, cfg);
        s.move_to(HOLE).unwrap();
        let steps = type_all(&mut s, "SELECT * FROM t");
        assert_eq!(steps.last().unwrap().1, "insert", "{h}: {steps:?}");
    }
}

#[test]
fn undo_restores_text_and_cursor() {
    let mut s = java(METHOD_SEMI);
    type_all(&mut s, "a + b");
    while s.undo() {}
    assert_eq!(s.text(), METHOD_SEMI);
    assert_eq!(s.cursor(), HOLE);
    s.document().validate().unwrap();
}

#[test]
fn non_ascii_text_uses_character_offsets() {
    let mut s = Session::new(common::comp("java_sql"), "class A {\n  String s = \"é\";\n  int x = ;\n}\n", Config::default());
    s.move_to(38).unwrap();
    assert_eq!(s.key("1").name(), "none");
    assert!(s.snapshot().errors.is_empty(), "{:?}", s.snapshot());
    assert_eq!(s.cursor(), 39);
    let steps = type_all(&mut s, " + SELECT * FROM t");
    assert_eq!(steps.last().unwrap().1, "insert");
    assert_eq!(spans(&s), vec![(42, 57)]);
}
