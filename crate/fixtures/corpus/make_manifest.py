"""Builds manifest.json from the test list below.

Each test replaces the text `target` inside the first occurrence of
`anchor` in a base file with `fragment`. Expected categories are read back
from an `outcomes-all.ndjson` produced by `autobox run` when one is given:

    python3 make_manifest.py [report-dir]
"""

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

TESTS = {
    ("java_sql", "Orders.java"): [
        ("int sum = price * qty;", "price * qty", "SELECT a FROM t"),
        ("int sum = price * qty;", "price * qty", "SELECT price, qty FROM items WHERE id = 3"),
        ("total = total + sum;", "total + sum", "SELECT total FROM orders"),
        ("count = count + 1;", "count + 1", "x + 1"),
        ("int avg = total / count;", "total / count", "SELECT min(price) AS m FROM orders"),
        ('String label = name + ": " + total;', 'name + ": " + total', "SELECT name FROM users WHERE age > 18 AND active = 1"),
        ("int rows = find(name, 10);", "find(name, 10)", "SELECT * FROM t"),
        ("rows = rows - 1;", "rows - 1", "SELECT COUNT(*) FROM log"),
        ("int count = 0;", "0", "SELECT 1"),
        ("int sum = price * qty;", "price * qty", "SELECT a, b FROM t WHERE a = 'x'"),
        ("total = total + sum;", "total + sum", "a * (b + c)"),
        ("int rows = find(name, 10);", "find(name, 10)", "SELECT o.id FROM orders o WHERE o.total > 100"),
        ("while (rows > 0)", "rows > 0", "SELECT a FROM t"),
        ("if (count > 0)", "count > 0", "SELECT * FROM t WHERE a = 1 OR b = 2"),
        ("return sum;", "sum", "SELECT sum(x) FROM t"),
        ("int sum = price * qty;", "price * qty", "SELECT a FROM t WHERE b + c"),
        ("int avg = total / count;", "total / count", "SELECT x FROM"),
    ],
    ("lua_sql", "inventory.lua"): [
        ("stock[item] = have + n", "have + n", "SELECT qty FROM stock WHERE item = 'x'"),
        ("local limit = 10", "10", "SELECT max(n) FROM limits"),
        ("have = 0", "0", "SELECT 1"),
        ('local line = name .. ": " .. count(name)', 'name .. ": " .. count(name)', "SELECT label FROM names"),
        ("lookup(name, limit)", "lookup(name, limit)", "SELECT * FROM rows"),
        ("rows = rows - 1", "rows - 1", "SELECT rows FROM t"),
        ("local have = stock[item]", "stock[item]", "SELECT have FROM stock"),
        ("local stock = {}", "{}", "SELECT * FROM inventory"),
        ("if have == nil", "have == nil", "SELECT a FROM t WHERE b = 1"),
        ("rows = rows - 1", "rows - 1", "x + 1"),
        ("lookup(name, limit)", "lookup(name, limit)", "f(a, b)"),
        ("local limit = 10", "10", "SELECT a, b FROM t u, v"),
        ("return stock[item]", "stock[item]", "SELECT id FROM stock WHERE qty > 0 AND id < 5"),
        ("stock[item] = have + n", "have + n", "SELECT a FROM t WHERE b < 2 OR c"),
        ("while rows > 0", "rows > 0", "SELECT 1 FROM t"),
        ("count(name)", "count(name)", "SELECT n FROM counts"),
    ],
    ("sql_lua", "report.sql"): [
        ("price * qty AS", "price * qty", "f(price, qty)"),
        ("price * qty AS", "price * qty", "local x = 1"),
        ("price > 10", "10", "x = 1"),
        (", name\n", "name", "string.upper(name)"),
        ("price > 10", "10", "tonumber(limit)"),
        ("qty < 2", "qty < 2", "if qty then return 1 end"),
        (", name\n", "name", "do local t = {} end"),
        ("price * qty AS", "price * qty", "while x do x = x - 1 end"),
        ("qty < 2", "2", "g(t[1])"),
        ("o.cust", "o.cust", "a.b.c()"),
        (", name\n", "name", 'print("hi")'),
        ("c.id AND", "c.id", "return 1"),
        ("price > 10", "10", "local n"),
        ("price * qty AS", "price * qty", "f(x) g(y)"),
        ("qty < 2", "2", "x, y = 1, 2"),
        (", name\n", "name", "function f() return 1 end"),
    ],
    ("js_html", "page.js"): [
        ("var body = list(items);", "list(items)", "<div>hello</div>"),
        ("var header = title;", "title", "<h1>Orders</h1>"),
        ('var title = "Orders";', '"Orders"', '<p class="c">text</p>'),
        ("body = body + count;", "body + count", "<br/>"),
        ("var cell = item.name;", "item.name", "<td>cell</td>"),
        ("return cell;", "cell", "<span>x</span>"),
        ("var count = 0;", "0", "<ul><li>a</li><li>b</li></ul>"),
        ("var body = list(items);", "list(items)", "hello"),
        ("var header = title;", "title", "a + b"),
        ("var cell = item.name;", "item.name", '<img src="a"/>'),
        ("body = body + count;", "body + count", "<b>bold</b> text"),
        ('var title = "Orders";', '"Orders"', "<div><p>x</p></div>"),
        ("var count = 0;", "0", "<i>1</i>"),
        ("var body = list(items);", "list(items)", '<a href="x">link</a>'),
        ("return cell;", "cell", "<em>hi</em>"),
        ("var header = title;", "title", "<div>a < b</div>"),
    ],
}


def expected_from(report_dir):
    path = os.path.join(report_dir, "outcomes-all.ndjson")
    return [json.loads(line)["category"] for line in open(path) if line.strip()]


def main():
    expected = expected_from(sys.argv[1]) if len(sys.argv) > 1 else None
    out = []
    for (comp, base), tests in TESTS.items():
        text = open(os.path.join(HERE, "bases", base), encoding="utf-8").read()
        for anchor, target, fragment in tests:
            at = text.index(anchor) + anchor.index(target)
            t = {
                "base_file": "bases/" + base,
                "offset": len(text[:at]),
                "span": len(target),
                "fragment": fragment,
                "composition": comp,
            }
            if expected:
                t["expected"] = expected[len(out)]
            out.append(t)
    with open(os.path.join(HERE, "manifest.json"), "w", encoding="utf-8") as f:
        json.dump(out, f, indent=1, ensure_ascii=False)
        f.write("\n")
    print(f"{len(out)} tests")


if __name__ == "__main__":
    main()
