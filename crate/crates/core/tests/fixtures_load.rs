mod common;

use autobox_core::engine::Document;

#[test]
fn every_composition_builds() {
    for id in ["java_sql", "lua_sql", "sql_lua", "js_html"] {
        let c = common::comp(id);
        for l in &c.langs {
            println!("{id}/{}: {} states", l.id, l.tables.nstates);
        }
    }
}

#[test]
fn sample_programs_parse() {
    let cases = [
        ("java_sql", "class A {\n  int x = 1, y;\n  void f(int a) {\n    int z = a + 2 * 3;\n    if (z < 4) { return; } else { z = z - 1; }\n    while (true) { g(z).h(); }\n  }\n}\n"),
        ("lua_sql", "local x = 1\nfunction f(a, b) return a .. b end\nx = f(1, 2) y = {1, 2}\nif x == 1 then print(x) else x = 2 end\n"),
        ("sql_lua", "SELECT a, min(b) AS m FROM t u, v WHERE a = 1 AND b < 2 OR c"),
        ("js_html", "var x = 1;\nfunction f(a) { return a + 1; }\nif (x < 2) { x = f(x); }\n"),
    ];
    for (id, text) in cases {
        let doc = Document::new(common::comp(id), text);
        assert_eq!(doc.text_all(), text);
        let errs: Vec<_> = doc.error_nodes().iter().map(|&n| doc.text(n).to_string()).collect();
        assert!(errs.is_empty(), "{id}: errors at {errs:?} in {text:?}");
    }
}

#[test]
fn sql_text_in_java_errors_at_the_second_identifier() {
    let doc = Document::new(common::comp("java_sql"), "void f() {\n  int x = SELECT * FROM t;\n}\n");
    let errs: Vec<_> = doc.error_nodes().iter().map(|&n| doc.text(n).to_string()).collect();
    assert_eq!(errs, vec!["t"]);
}
