//! Two-sided binary subshifts through the lamplighter separated graph:
//! word names for the levels of its Bratteli diagram, the hereditary
//! saturated set of a forbidden family, finite-type detection by lift
//! stabilization, and the quotient graphs of finite-type subshifts.

mod error;
mod ideal;
mod lamplighter;
mod language;
mod word;

pub use error::WordShiftError;
pub use ideal::{finite_type_detect, forbidden_to_hset, layer_words, word_quotient, FiniteTypeVerdict, WordIdeal, STABILIZATION_MARGIN};
pub use lamplighter::{edge_word_name, kind_at_level, lamplighter_graph, vertex_word_name, DropSide, EdgeKind, LamplighterTower};
pub use language::{Language, MAX_FORBIDDEN_LENGTH};
pub use word::{parse_word_list, BinaryWord};
