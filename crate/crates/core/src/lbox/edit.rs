//! Structural box edits. Each leaves every affected tree parsed.

use crate::engine::{flag, Atom, BoxData, Document, Kind, NodeId, Origin, ParseOutcome};

impl Document {
    /// Wraps bytes `start..end` of the tree under `root` in a new box of
    /// language `lang`. Returns the box and the outer tree's parse.
    pub fn insert_box(
        &mut self,
        root: NodeId,
        start: usize,
        end: usize,
        lang: usize,
        origin: Origin,
        trigger: Option<NodeId>,
    ) -> (NodeId, ParseOutcome) {
        let outer = self.lang_of(root);
        let sym = self
            .composition()
            .lbox_for(outer, lang)
            .expect("language cannot be embedded here");
        let text = self.text_range(root, start, end);
        let inner = self.new_tree(lang);
        let b = self.new_node(Kind::LBox, outer, sym, "");
        self.register_box(b, BoxData { inner, lang, origin, trigger });
        if !text.is_empty() {
            self.splice(inner, 0, 0, vec![Atom::Text(text)]);
        }
        self.parse(inner);
        self.set_len(b, self.len(inner));
        self.splice(root, start, end, vec![Atom::Box(b)]);
        (b, self.parse(root))
    }

    /// Replaces box `b` by its text in the enclosing tree.
    pub fn remove_box(&mut self, b: NodeId) -> ParseOutcome {
        let root = self.tree_root(b);
        let s = self.offset(b);
        let text = self.subtree_text(self.box_data(b).inner);
        let atoms = if text.is_empty() { vec![] } else { vec![Atom::Text(text)] };
        self.splice(root, s, s + self.len(b), atoms);
        self.parse(root)
    }

    /// Moves box `b`'s end to `new_end` (an offset in the enclosing tree),
    /// taking text from after the box or handing its tail back.
    pub fn resize_box(&mut self, b: NodeId, new_end: usize) -> ParseOutcome {
        let root = self.tree_root(b);
        let inner = self.box_data(b).inner;
        let s = self.offset(b);
        let e = s + self.len(b);
        if new_end > e {
            let moved = self.text_range(root, e, new_end);
            self.splice(root, e, new_end, vec![]);
            let il = self.len(inner);
            self.splice(inner, il, il, vec![Atom::Text(moved)]);
        } else if new_end < e {
            let moved = self.text_range(inner, new_end - s, e - s);
            self.splice(inner, new_end - s, e - s, vec![]);
            self.splice(root, new_end, new_end, vec![Atom::Text(moved)]);
        }
        self.parse(inner);
        self.parse(root)
    }

    pub fn is_committed(&self, b: NodeId) -> bool {
        self.has(b, flag::COMMITTED)
    }

    pub fn set_committed(&mut self, b: NodeId, on: bool) {
        self.set_flag(b, flag::COMMITTED, on);
    }
}
