"""Writes Big.java (1,000 lines of MiniJava) and manifest.json with
insertions near its start, middle and end."""

import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def method(i):
    return [
        f"  int m{i}(int a, int b) {{",
        f"    int s = a * {i} + b;",
        f"    if (s > {i % 7}) {{",
        f"      s = s - f(a, b);",
        "    }",
        f"    while (s < {i}) {{",
        "      s = s + 1;",
        "    }",
        "    return s;",
        "  }",
    ]


def main():
    lines = ["class Big {", "  int total = 0;"]
    i = 0
    while len(lines) + 10 <= 999:
        lines += method(i)
        i += 1
    while len(lines) < 999:
        lines.append("  int pad%d = %d;" % (len(lines), len(lines)))
    lines.append("}")
    text = "\n".join(lines) + "\n"
    assert len(text.splitlines()) == 1000
    with open(os.path.join(HERE, "Big.java"), "w") as f:
        f.write(text)
    tests = []
    for m, frag in [(1, "SELECT a, b FROM t WHERE a = 1"), (48, "SELECT min(x) AS m FROM log"), (96, "SELECT * FROM t")]:
        anchor = f"int s = a * {m} + b;"
        target = f"a * {m} + b"
        at = text.index(anchor) + anchor.index(target)
        tests.append({"base_file": "Big.java", "offset": at, "span": len(target), "fragment": frag,
                      "composition": "java_sql", "expected": "complete_insertion"})
    with open(os.path.join(HERE, "manifest.json"), "w") as f:
        json.dump(tests, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
