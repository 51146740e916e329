//! Isolated points and primeness: dead ends, path and boundary closures of
//! signed-edge sets, the vertex sets `V(A)`, the Cantor criterion, the
//! linkability relation with its maximal unlinkable pairs, and the
//! primeness decision with a Bratteli connectivity cross-check.

mod closure;
mod dead_end;
mod error;
mod link;
mod prime;
mod signed;

pub use closure::{boundary_closure, boundary_strata, path_closure, v_of};
pub use dead_end::{ball_boundary, dead_ends, is_cantor, isolated_ball, CantorReport, IsolatedWitness};
pub use error::PrimeError;
pub use link::{maximal_unlinkable_pairs, GaloisPair, LinkRelation, DEFAULT_PAIR_CAP};
pub use prime::{connectivity_check, is_prime, ConnectivityCheck, PrimeReport, PrimeVerdict, DEFAULT_CONNECTIVITY_BUDGET, DEFAULT_CONNECTIVITY_LEVELS};
pub use signed::SignedEdgeSet;
