//! Convex subshifts over free groups: balls of `Omega(E, C)`, forbidden-ball
//! subshifts, the n-ball recoding and the separated graph representing a
//! 1-step subshift.

mod ball;
mod convex;
mod error;
mod graph_balls;
mod recode;
mod represent;

pub use ball::{Alphabet, Ball};
pub use convex::{avoids_forbidden, full_balls, is_pruning_stable, prune_allowed_balls, stable_core};
pub use error::SubshiftError;
pub use graph_balls::{ball_vertex, check_graph_ball, enumerate_balls, vertex_ball, vertex_balls};
pub use recode::{ball_recode, unrecode, RecodedAlphabet, Symbol};
pub use represent::{represent_finite_type, represent_one_step, FiniteTypeRepresentation, Representation};

/// Default cap on the number of balls an enumeration may produce.
pub const DEFAULT_MAX_BALLS: usize = 1_000_000;
