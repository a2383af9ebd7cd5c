//! The tower-file language and word expressions.

pub mod tower;
pub mod word;

pub use tower::{build_tower, load_tower, parse_tower, Diagnostic, DiagnosticKind, Entity, Tower, TowerFile};
pub use word::{parse_word, WordError};
