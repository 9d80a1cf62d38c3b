//! Incremental LR parsing for composed languages with automatic language boxes.

pub mod engine;
pub mod grammar;
pub mod lbox;
pub mod autobox;
pub mod oracle;
