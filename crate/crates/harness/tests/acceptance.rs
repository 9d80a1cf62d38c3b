//! One line per acceptance criterion. Run with `--nocapture` to see them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use autobox_core::autobox::{Config, Heuristic, Session};
use autobox_core::engine::Document;
use autobox_core::grammar::Composition;
use autobox_core::oracle;
use autobox_harness::protocol::replay;
use autobox_harness::report::read_outcomes;
use autobox_harness::{load_manifest, Category};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn comp(id: &str) -> Arc<Composition> {
    Arc::new(Composition::load(fixtures().join(format!("languages/{id}.composition"))).unwrap())
}

fn autobox(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_autobox")).args(args).output().map_err(|e| e.to_string())
}

fn run_cli(manifest: &Path, h: Heuristic, dir: &Path, timing: bool) -> Result<(), String> {
    let comp = fixtures().join("languages/java_sql.composition");
    let mut args = vec![
        "run",
        "--composition",
        comp.to_str().unwrap(),
        "--tests",
        manifest.to_str().unwrap(),
        "--heuristic",
        h.name(),
        "--report-dir",
        dir.to_str().unwrap(),
        "--no-fail",
    ];
    if timing {
        args.push("--timing");
    }
    let out = autobox(&args)?;
    if !out.status.success() {
        return Err(format!("autobox run failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(())
}

type Check = fn() -> Result<String, String>;

fn within(start: Instant, limit: Duration, detail: String) -> Result<String, String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("{detail}, but took {:.1} s (limit {} s)", t.as_secs_f64(), limit.as_secs()))
    } else {
        Ok(format!("{detail} in {:.1} s", t.as_secs_f64()))
    }
}

fn batch_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA7C4);
    let (mut edits, mut accepted) = (0, 0);
    for (id, scripts) in [("java_sql", 500), ("sql_lua", 500)] {
        let comp = comp(id);
        let w = oracle::workload_for(&comp);
        for i in 0..scripts {
            let n = rng.gen_range(1..=100);
            let mut doc = Document::new(comp.clone(), w.base);
            accepted += oracle::run_edit_script(&mut doc, &w, &mut rng, n).map_err(|e| format!("{id} script {i}: {e}"))?;
            edits += 2 * n;
        }
    }
    within(start, Duration::from_secs(60), format!("1000 scripts, {edits} edits, {accepted} accepted states checked against batch parses"))
}

fn recogniser_oracle() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EC06);
    let mut found = 0;
    for id in ["java_sql", "lua_sql", "sql_lua", "js_html"] {
        let comp = comp(id);
        let w = oracle::workload_for(&comp);
        for i in 0..500 {
            let doc = oracle::random_document(&comp, &w, &mut rng, i % 6);
            found += oracle::check_recogniser(&doc, &mut rng).map_err(|e| format!("{id}: {e}"))?;
        }
    }
    within(start, Duration::from_secs(30), format!("4 x 500 triples, {found} candidate ends matched"))
}

fn stack_recreation() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x57AC);
    let comps: Vec<_> = ["java_sql", "lua_sql", "sql_lua", "js_html"].iter().map(|c| comp(c)).collect();
    let (mut compared, mut tries) = (0, 0);
    while compared < 200 {
        tries += 1;
        if tries > 20_000 {
            return Err(format!("only {compared} comparable positions in {tries} tries"));
        }
        let c = &comps[tries % comps.len()];
        let w = oracle::workload_for(c);
        compared += oracle::check_recreation(c, &w, &mut rng)? as usize;
    }
    within(start, Duration::from_secs(10), format!("{compared} positions matched ({tries} drawn)"))
}

#[derive(Deserialize)]
struct Scenario {
    name: String,
    composition: String,
    base: String,
}

fn scenario_traces() -> Result<String, String> {
    let dir = fixtures().join("scenarios");
    let list: Vec<Scenario> =
        serde_json::from_str(&fs::read_to_string(dir.join("scenarios.json")).unwrap()).map_err(|e| e.to_string())?;
    let mut names = Vec::new();
    for sc in &list {
        let base = fs::read_to_string(dir.join(&sc.base)).map_err(|e| e.to_string())?;
        let script = fs::read_to_string(dir.join(format!("{}.ndjson", sc.name))).map_err(|e| e.to_string())?;
        let want = fs::read_to_string(dir.join(format!("{}.trace.ndjson", sc.name))).map_err(|e| e.to_string())?;
        let mut s = Session::new(comp(&sc.composition), &base, Config::default());
        let got: Vec<String> = replay(&mut s, &script).iter().map(|m| m.to_line()).collect();
        let want: Vec<&str> = want.lines().collect();
        if got.len() != want.len() {
            return Err(format!("{}: {} states, expected {}", sc.name, got.len(), want.len()));
        }
        if let Some(i) = (0..got.len()).find(|&i| got[i] != want[i]) {
            return Err(format!("{}: state {i} differs\n  got  {}\n  want {}", sc.name, got[i], want[i]));
        }
        names.push(sc.name.as_str());
    }
    if names.len() < 5 {
        return Err(format!("only {} scenarios", names.len()));
    }
    Ok(format!("{} traces matched: {}", names.len(), names.join(", ")))
}

fn curated_corpus() -> Result<String, String> {
    let start = Instant::now();
    let manifest = fixtures().join("corpus/manifest.json");
    let tests = load_manifest(&manifest).map_err(|e| e.to_string())?;
    let mut comps: Vec<&str> = tests.iter().map(|t| t.composition.as_str()).collect();
    comps.sort_unstable();
    comps.dedup();
    if tests.len() < 60 || comps.len() < 4 || !comps.contains(&"js_html") {
        return Err(format!("{} tests over {comps:?}", tests.len()));
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for h in Heuristic::EVERY {
        run_cli(&manifest, h, dir.path(), false)?;
    }
    let acceptable = |h| -> Result<usize, String> {
        let rs = read_outcomes(dir.path(), h).map_err(|e| e.to_string())?.ok_or("missing outcomes")?;
        Ok(rs.iter().filter(|r| r.category.acceptable()).count())
    };
    let all = read_outcomes(dir.path(), Heuristic::All).map_err(|e| e.to_string())?.ok_or("missing outcomes")?;
    let wrong: Vec<String> = all
        .iter()
        .zip(&tests)
        .filter(|(r, t)| t.expected != Some(r.category))
        .map(|(r, t)| format!("test {}: {} vs {:?}", r.index, r.category, t.expected.map(Category::name)))
        .collect();
    if !wrong.is_empty() {
        return Err(format!("{} of {} differ: {}", wrong.len(), tests.len(), wrong.join("; ")));
    }
    let n_all = acceptable(Heuristic::All)?;
    for h in [Heuristic::ParseTree, Heuristic::Stack, Heuristic::Line] {
        let n = acceptable(h)?;
        if n > n_all {
            return Err(format!("{h} has {n} acceptable outcomes, all has {n_all}"));
        }
    }
    for f in ["acceptable.csv", "categories.csv"] {
        let got = fs::read_to_string(dir.path().join(f)).map_err(|e| e.to_string())?;
        let want = fs::read_to_string(fixtures().join("corpus/expected").join(f)).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{f} differs from the checked-in table:\n{got}"));
        }
    }
    within(
        start,
        Duration::from_secs(120),
        format!("{} tests over {} compositions, all categories matched, {n_all} acceptable under all", tests.len(), comps.len()),
    )
}

fn timing() -> Result<String, String> {
    let manifest = fixtures().join("timing/manifest.json");
    let base = fs::read_to_string(fixtures().join("timing/Big.java")).map_err(|e| e.to_string())?;
    let lines = base.lines().count();
    if lines < 1000 {
        return Err(format!("base has {lines} lines"));
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    run_cli(&manifest, Heuristic::All, dir.path(), true)?;
    let summary = fs::read_to_string(dir.path().join("timing-all.txt")).map_err(|e| e.to_string())?;
    let field = |k: &str| -> Result<f64, String> {
        summary
            .lines()
            .find_map(|l| l.strip_prefix(k).map(|v| v.trim().parse::<f64>()))
            .ok_or(format!("no {k} in timing report"))?
            .map_err(|e| e.to_string())
    };
    let (mean, max) = (field("mean_ms")?, field("max_ms")?);
    let detail = format!("{lines}-line MiniJava, mean {mean:.3} ms, max {max:.3} ms per keypress");
    if mean < 10.0 && max < 100.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn determinism() -> Result<String, String> {
    let manifest = fixtures().join("corpus/manifest.json");
    let dirs = [tempfile::tempdir().map_err(|e| e.to_string())?, tempfile::tempdir().map_err(|e| e.to_string())?];
    for d in &dirs {
        for h in Heuristic::EVERY {
            run_cli(&manifest, h, d.path(), true)?;
        }
    }
    let files = |d: &Path| -> Vec<String> {
        let mut v: Vec<String> = fs::read_dir(d)
            .unwrap()
            .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
            .filter(|n| !n.starts_with("timing-"))
            .collect();
        v.sort();
        v
    };
    let names = files(dirs[0].path());
    if names != files(dirs[1].path()) {
        return Err("runs wrote different report files".into());
    }
    for n in &names {
        if fs::read(dirs[0].path().join(n)).unwrap() != fs::read(dirs[1].path().join(n)).unwrap() {
            return Err(format!("{n} differs between runs"));
        }
    }
    Ok(format!("{} report files byte-identical across two runs", names.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Check); 7] = [
        ("batch equivalence", batch_equivalence),
        ("recogniser oracle", recogniser_oracle),
        ("stack recreation oracle", stack_recreation),
        ("scenario traces", scenario_traces),
        ("curated corpus", curated_corpus),
        ("timing", timing),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
