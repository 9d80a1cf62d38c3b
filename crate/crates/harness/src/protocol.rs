//! Newline-delimited JSON messages between an editor and a session.

use autobox_core::autobox::{Session, Snapshot};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClientMsg {
    /// `"Backspace"` or `"\u0008"` deletes backwards, `"Delete"` or
    /// `"\u007f"` forwards; any other string is typed as one keypress.
    Key { ch: String },
    Move { pos: usize },
    Undo,
    Choose { id: usize },
    MarkUncommitted {
        #[serde(rename = "box")]
        boxid: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxMsg {
    pub id: u32,
    pub start: usize,
    pub end: usize,
    pub lang: String,
    pub state: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorMsg {
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateMsg {
    pub id: usize,
    pub start: usize,
    pub end: usize,
    pub lang: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateMsg {
    pub text: String,
    pub cursor: usize,
    pub boxes: Vec<BoxMsg>,
    pub errors: Vec<ErrorMsg>,
    pub candidates: Vec<CandidateMsg>,
}

impl From<Snapshot> for StateMsg {
    fn from(s: Snapshot) -> Self {
        StateMsg {
            text: s.text,
            cursor: s.cursor,
            boxes: s
                .boxes
                .into_iter()
                .map(|b| BoxMsg { id: b.id, start: b.start, end: b.end, lang: b.lang, state: b.state.name().into() })
                .collect(),
            errors: s.errors.into_iter().map(|pos| ErrorMsg { pos }).collect(),
            candidates: s
                .candidates
                .into_iter()
                .map(|c| CandidateMsg { id: c.id, start: c.start, end: c.end, lang: c.lang })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ServerMsg {
    State(StateMsg),
    Error { message: String },
}

impl ServerMsg {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("server messages serialise")
    }
}

pub fn state(s: &Session) -> ServerMsg {
    ServerMsg::State(s.snapshot().into())
}

pub fn apply(s: &mut Session, msg: &ClientMsg) -> Result<(), String> {
    match msg {
        ClientMsg::Key { ch } => match ch.as_str() {
            "" => return Err("empty key".into()),
            "Backspace" | "\u{8}" => {
                s.backspace();
            }
            "Delete" | "\u{7f}" => {
                s.delete_forward();
            }
            text => {
                s.key(text);
            }
        },
        ClientMsg::Move { pos } => s.move_to(*pos).map_err(|e| e.to_string())?,
        ClientMsg::Undo => {
            s.undo();
        }
        ClientMsg::Choose { id } => {
            s.choose(*id).map_err(|e| e.to_string())?;
        }
        ClientMsg::MarkUncommitted { boxid } => s.mark_uncommitted(*boxid).map_err(|e| e.to_string())?,
    }
    Ok(())
}

/// Handles one input line: the new state, or an error leaving the session
/// as it was.
pub fn handle_line(s: &mut Session, line: &str) -> ServerMsg {
    match serde_json::from_str::<ClientMsg>(line) {
        Ok(m) => match apply(s, &m) {
            Ok(()) => state(s),
            Err(message) => ServerMsg::Error { message },
        },
        Err(e) => ServerMsg::Error { message: format!("malformed message: {e}") },
    }
}

/// Replies to each non-blank line of `script`, after the initial state.
pub fn replay(s: &mut Session, script: &str) -> Vec<ServerMsg> {
    let mut out = vec![state(s)];
    out.extend(script.lines().filter(|l| !l.trim().is_empty()).map(|l| handle_line(s, l)));
    out
}
