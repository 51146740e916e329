//! Finite bipartite separated graphs.
//!
//! A separated graph is a directed graph whose edges run from layer-1
//! vertices to layer-0 vertices, together with a partition of every range
//! fiber `r^-1(v)` into nonempty edge groups. This crate holds the data model,
//! the admissible-path machinery on the double graph and the line-based SGF
//! text format.

mod corpus;
mod digraph;
mod error;
mod graph;
mod incidence;
mod path;
mod sgf;
mod word;

pub use corpus::{corpus, corpus_graph, CorpusEntry, CORPUS_NAMES};
pub use digraph::DiGraph;
pub use error::{GraphError, Location, WordError};
pub use graph::{Edge, EdgeId, GraphBuilder, Group, GroupId, Layer, SeparatedGraph, Vertex, VertexId};
pub use incidence::Incidence;
pub use path::{paths_between, reduced_product, LetterAutomaton};
pub use sgf::{load, save};
pub use word::{Letter, Word};
