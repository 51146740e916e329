//! The 1-graph construction, separated Bratteli diagrams, graph monoid
//! presentations and their Grothendieck groups.

mod error;
mod monoid;
mod one_graph;
mod snf;
mod tower;

pub use error::BratteliError;
pub use monoid::{grothendieck, monoid_presentation, GrothendieckGroup, MonoidPresentation, Relation};
pub use one_graph::{has_distinct_sources, one_graph, one_graph_size, one_graph_with_budget, LevelNaming, OneGraph};
pub use snf::{smith_normal_form, invariant_factors};
pub use tower::{budget_from_env, tower, BratteliTower, GlobalVertex, DEFAULT_MAX_VERTICES};
