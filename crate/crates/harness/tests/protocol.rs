use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::thread;

use autobox_core::autobox::Config;
use autobox_core::grammar::Composition;
use autobox_harness::protocol::{ClientMsg, ServerMsg, StateMsg};
use autobox_harness::serve::{serve, SessionTemplate};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn start(base: &str) -> String {
    let comp = Arc::new(Composition::load(fixtures().join("languages/java_sql.composition")).unwrap());
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap().to_string();
    let t = SessionTemplate { comp, base: base.into(), cfg: Config::default() };
    thread::spawn(move || serve(listener, t));
    addr
}

struct Client {
    out: TcpStream,
    input: BufReader<TcpStream>,
}

impl Client {
    fn connect(addr: &str) -> (Client, StateMsg) {
        let s = TcpStream::connect(addr).unwrap();
        s.set_nodelay(true).unwrap();
        let mut c = Client { out: s.try_clone().unwrap(), input: BufReader::new(s) };
        let first = c.read_line();
        (c, state(&first))
    }

    fn read_line(&mut self) -> String {
        let mut line = String::new();
        self.input.read_line(&mut line).unwrap();
        line.trim_end().to_string()
    }

    fn send_raw(&mut self, line: &str) -> String {
        writeln!(self.out, "{line}").unwrap();
        self.read_line()
    }

    fn send(&mut self, m: &ClientMsg) -> ServerMsg {
        serde_json::from_str(&self.send_raw(&serde_json::to_string(m).unwrap())).unwrap()
    }

    fn key(&mut self, ch: &str) -> StateMsg {
        match self.send(&ClientMsg::Key { ch: ch.into() }) {
            ServerMsg::State(s) => s,
            e => panic!("{e:?}"),
        }
    }
}

fn state(line: &str) -> StateMsg {
    match serde_json::from_str(line).unwrap() {
        ServerMsg::State(s) => s,
        e => panic!("{e:?}"),
    }
}

#[test]
fn served_running_example_matches_the_golden_trace() {
    let dir = fixtures().join("scenarios");
    let addr = start(&fs::read_to_string(fixtures().join("bases/method.java")).unwrap());
    let s = TcpStream::connect(&addr).unwrap();
    s.set_nodelay(true).unwrap();
    let mut c = Client { out: s.try_clone().unwrap(), input: BufReader::new(s) };
    let want: Vec<String> =
        fs::read_to_string(dir.join("running_example.trace.ndjson")).unwrap().lines().map(String::from).collect();
    let mut got = vec![c.read_line()];
    for line in fs::read_to_string(dir.join("running_example.ndjson")).unwrap().lines() {
        got.push(c.send_raw(line));
    }
    assert_eq!(got, want);
}

#[test]
fn snapshot_text_tracks_every_message() {
    let addr = start("class A {\n  int x = ;\n}\n");
    let (mut c, first) = Client::connect(&addr);
    let mut text = first.text.clone();
    c.send(&ClientMsg::Move { pos: 20 });
    let mut pos = 20;
    for ch in "SELECT * FROM t".chars() {
        let s = c.key(&ch.to_string());
        text.insert(pos, ch);
        pos += 1;
        assert_eq!(s.text, text);
        assert_eq!(s.cursor, pos);
    }
    let s = c.key("Backspace");
    text.remove(pos - 1);
    assert_eq!(s.text, text);
}

#[test]
fn malformed_messages_get_an_error_and_keep_the_session() {
    let addr = start("class A {\n  int x = ;\n}\n");
    let (mut c, first) = Client::connect(&addr);
    for bad in ["not json", r#"{"type":"jump"}"#, r#"{"type":"move"}"#, r#"{"type":"move","pos":999}"#, r#"{"type":"choose","id":0}"#] {
        let reply: ServerMsg = serde_json::from_str(&c.send_raw(bad)).unwrap();
        assert!(matches!(reply, ServerMsg::Error { .. }), "{bad}: {reply:?}");
    }
    c.send(&ClientMsg::Move { pos: 20 });
    let s = c.key("1");
    assert_eq!(s.text, first.text.replace("= ;", "= 1;"));
    assert!(s.errors.is_empty());
}

#[test]
fn choose_and_undo_round_trips() {
    let addr = start("class A {\n  void f() {\n    int x = ;\n  }\n}\n");
    let (mut c, _) = Client::connect(&addr);
    c.send(&ClientMsg::Move { pos: 35 });
    let s = c.key("SELECT a FROM t WHERE b + c");
    assert_eq!(s.candidates.len(), 2);
    assert!(s.boxes.is_empty());
    let ServerMsg::State(s) = c.send(&ClientMsg::Choose { id: 0 }) else { panic!() };
    assert!(s.candidates.is_empty());
    assert_eq!((s.boxes[0].start, s.boxes[0].end), (35, 58));
    let ServerMsg::State(s) = c.send(&ClientMsg::Undo) else { panic!() };
    assert!(s.boxes.is_empty());
    assert!(s.candidates.is_empty());
}

#[test]
fn undo_after_insertion_is_not_reinserted() {
    let addr = start("class A {\n  void f() {\n    int x = \n  }\n}\n");
    let (mut c, _) = Client::connect(&addr);
    c.send(&ClientMsg::Move { pos: 35 });
    let mut s = c.key("S");
    for ch in "ELECT min(a),".chars() {
        s = c.key(&ch.to_string());
    }
    assert_eq!(s.boxes.len(), 1);
    let ServerMsg::State(s) = c.send(&ClientMsg::Undo) else { panic!() };
    assert!(s.boxes.is_empty());
    c.key("Backspace");
    assert!(c.key(",").boxes.is_empty());
}

#[test]
fn connections_have_separate_sessions() {
    let addr = start("class A {\n  int x = ;\n}\n");
    let (mut a, _) = Client::connect(&addr);
    let (mut b, _) = Client::connect(&addr);
    a.send(&ClientMsg::Move { pos: 20 });
    let sa = a.key("1");
    b.send(&ClientMsg::Move { pos: 20 });
    let sb = b.key("2");
    assert!(sa.text.contains("= 1;"));
    assert!(sb.text.contains("= 2;"));
    let ServerMsg::Error { .. } = b.send(&ClientMsg::MarkUncommitted { boxid: 12345 }) else { panic!() };
}
