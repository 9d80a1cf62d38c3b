//! Versioned parse trees, incremental lexing and incremental parsing.

mod doc;
mod hist;
mod parser;
mod relex;
pub mod shape;

pub use doc::{flag, BoxData, Document, Kind, NodeId, Origin};
pub use hist::Hist;
pub use parser::{ParseOutcome, StackEntry};
pub use relex::Atom;

impl Document {
    /// Deletes `delete` bytes at `pos` in the tree under `root`, inserts
    /// `insert`, and relexes. Returns the new version.
    pub fn apply_edit(&mut self, root: NodeId, pos: usize, delete: usize, insert: &str) -> u32 {
        let atoms = if insert.is_empty() { vec![] } else { vec![Atom::Text(insert.to_string())] };
        self.splice(root, pos, pos + delete, atoms);
        self.version()
    }

    /// Relex and reparse in one step.
    pub fn edit(&mut self, root: NodeId, pos: usize, delete: usize, insert: &str) -> ParseOutcome {
        self.apply_edit(root, pos, delete, insert);
        self.parse(root)
    }
}
