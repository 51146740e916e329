//! Hereditary and C-saturated vertex sets: closures, the lattice of closed
//! sets, lifts along the 1-graph construction, quotient graphs and the
//! level-by-level bookkeeping of ideals in a Bratteli tower.

mod closure;
mod error;
mod ideal;
mod lattice;
mod lift;
mod vertex_set;

pub use closure::{closure_hs, closure_in, is_hereditary, is_hereditary_in, is_saturated, is_saturated_in};
pub use error::HereditaryError;
pub use ideal::{spread_from_level, tower_ideal, IdealReport};
pub use lattice::{closed_sets, enumerate_hsets, HLattice, DEFAULT_LATTICE_CAP};
pub use lift::{lift_in_tower, lift_one_level, quotient_graph};
pub use vertex_set::VertexSet;
