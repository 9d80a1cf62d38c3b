use std::io::{BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::Arc;
use std::thread;

use autobox_core::autobox::{Config, Session};
use autobox_core::grammar::Composition;

use crate::protocol::{handle_line, state};

/// What each new connection's session starts from.
#[derive(Debug, Clone)]
pub struct SessionTemplate {
    pub comp: Arc<Composition>,
    pub base: Arc<str>,
    pub cfg: Config,
}

impl SessionTemplate {
    pub fn session(&self) -> Session {
        Session::new(self.comp.clone(), &self.base, self.cfg)
    }
}

/// Runs one session over a connection until the peer closes it.
pub fn serve_connection(t: &SessionTemplate, stream: TcpStream) -> std::io::Result<()> {
    stream.set_nodelay(true)?;
    let mut s = t.session();
    let mut out = stream.try_clone()?;
    writeln!(out, "{}", state(&s).to_line())?;
    for line in BufReader::new(stream).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        writeln!(out, "{}", handle_line(&mut s, &line).to_line())?;
    }
    Ok(())
}

/// Accepts connections forever, one thread and session each.
pub fn serve(listener: TcpListener, t: SessionTemplate) -> std::io::Result<()> {
    let t = Arc::new(t);
    for stream in listener.incoming() {
        let stream = stream?;
        let t = t.clone();
        thread::spawn(move || {
            let _ = serve_connection(&t, stream);
        });
    }
    Ok(())
}
