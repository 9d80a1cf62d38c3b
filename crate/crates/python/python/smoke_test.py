"""Smoke test for the Python bindings. Run from the repository root:

    python3 crates/python/python/smoke_test.py
"""

import os
import sys

import autobox

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..", ".."))
LANGS = os.path.join(ROOT, "fixtures", "languages")


def main():
    comp = autobox.Composition.load(os.path.join(LANGS, "java_sql.composition"))
    assert comp.languages == ["MiniJava", "MiniSQL"], comp.languages

    base = "class A {\n  void f() {\n    int x = ;\n  }\n}\n"
    s = autobox.Session(comp, base)
    s.move_to(35)
    decisions = s.type_text("SELECT * FROM t")
    assert decisions[-1] == "insert", decisions
    snap = s.snapshot()
    assert [(b["start"], b["end"], b["lang"]) for b in snap["boxes"]] == [(35, 50, "MiniSQL")], snap
    assert snap["errors"] == []
    assert s.undo()
    assert s.snapshot()["boxes"] == []

    s = autobox.Session(comp, base)
    s.move_to(35)
    assert s.key("SELECT a FROM t WHERE b + c") == "present"
    assert len(s.snapshot()["candidates"]) == 2
    assert s.choose(1) == "insert"

    out = autobox.run_test(comp, base, 35, 0, "SELECT a FROM t")
    assert out["category"] == "complete_insertion", out
    assert len(out["times_ms"]) == len("SELECT a FROM t")

    results = autobox.run_manifest_file(
        os.path.join(LANGS, "java_sql.composition"),
        os.path.join(ROOT, "fixtures", "corpus", "manifest.json"),
    )
    assert all(r["category"] == r["expected"] for r in results)

    try:
        s.move_to(10_000)
    except ValueError:
        pass
    else:
        raise AssertionError("move past the end should fail")
    print(f"ok: {len(results)} corpus tests replayed")


if __name__ == "__main__":
    sys.exit(main())
