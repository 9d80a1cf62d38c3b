use std::net::TcpListener;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use autobox_core::autobox::{Config, Heuristic, Session};
use autobox_core::grammar::Composition;
use autobox_harness::report::{run_manifest, write_outcomes, write_tables, write_timing, Record};
use autobox_harness::serve::{serve, SessionTemplate};
use autobox_harness::{load_manifest, protocol, Compositions, HarnessError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "autobox", version, about = "Automatic language box replay and session server")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Replay a test manifest and write reports.
    Run {
        #[arg(long)]
        composition: PathBuf,
        #[arg(long)]
        tests: PathBuf,
        #[arg(long, default_value = "all")]
        heuristic: Heuristic,
        #[arg(long)]
        report_dir: PathBuf,
        /// Record per-keypress times.
        #[arg(long)]
        timing: bool,
        /// Exit 0 even when some outcomes are unacceptable.
        #[arg(long)]
        no_fail: bool,
    },
    /// Serve editing sessions over TCP, one per connection.
    Serve {
        #[arg(long)]
        composition: PathBuf,
        #[arg(long)]
        listen: String,
        /// Initial document text for every session.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        heuristic: Heuristic,
    },
    /// Feed a file of client messages to one session and print the replies.
    Replay {
        #[arg(long)]
        composition: PathBuf,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        script: PathBuf,
        #[arg(long, default_value = "all")]
        heuristic: Heuristic,
    },
}

fn read(path: &PathBuf) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.clone(), source })
}

fn base_text(base: &Option<PathBuf>) -> Result<String, HarnessError> {
    base.as_ref().map(read).transpose().map(Option::unwrap_or_default)
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.cmd {
        Cmd::Run { composition, tests, heuristic, report_dir, timing, no_fail } => {
            let mut comps = Compositions::with_file(&composition)?;
            let manifest = load_manifest(&tests)?;
            let cfg = Config { heuristic, ..Config::default() };
            let runs = run_manifest(&mut comps, &manifest, cfg)?;
            std::fs::create_dir_all(&report_dir)
                .map_err(|source| HarnessError::Io { path: report_dir.clone(), source })?;
            let records: Vec<Record> = runs.iter().map(|(r, _)| r.clone()).collect();
            write_outcomes(&report_dir, heuristic, &records)?;
            write_tables(&report_dir)?;
            let bad = records.iter().filter(|r| !r.category.acceptable()).count();
            let mismatched = records.iter().filter(|r| r.mismatched()).count();
            println!("{heuristic}: {} tests, {bad} unacceptable, {mismatched} differ from expected", records.len());
            for r in records.iter().filter(|r| r.mismatched()) {
                println!("  test {}: {} (expected {})", r.index, r.category, r.expected.unwrap());
            }
            if timing {
                let t = write_timing(&report_dir, heuristic, &runs)?;
                println!("{} keypresses, mean {:.3} ms, max {:.3} ms", t.keypresses, t.mean_ms, t.max_ms);
            }
            Ok(if bad == 0 || no_fail { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Serve { composition, listen, base, heuristic } => {
            let comp = Arc::new(Composition::load(&composition)?);
            let t = SessionTemplate {
                comp,
                base: base_text(&base)?.into(),
                cfg: Config { heuristic, ..Config::default() },
            };
            let listener = TcpListener::bind(&listen)
                .map_err(|source| HarnessError::Io { path: listen.clone().into(), source })?;
            if let Ok(addr) = listener.local_addr() {
                eprintln!("listening on {addr}");
            }
            serve(listener, t).map_err(|source| HarnessError::Io { path: listen.into(), source })?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Replay { composition, base, script, heuristic } => {
            let comp = Arc::new(Composition::load(&composition)?);
            let mut s = Session::new(comp, &base_text(&base)?, Config { heuristic, ..Config::default() });
            for m in protocol::replay(&mut s, &read(&script)?) {
                println!("{}", m.to_line());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("autobox: {e}");
            ExitCode::from(2)
        }
    }
}
