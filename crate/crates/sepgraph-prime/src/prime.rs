use std::collections::BTreeSet;

use sepgraph_bratteli::tower;
use sepgraph_core::{LetterAutomaton, SeparatedGraph, VertexId};

use crate::closure::v_of;
use crate::dead_end::{is_cantor, CantorReport, IsolatedWitness};
use crate::error::PrimeError;
use crate::link::{maximal_unlinkable_pairs, GaloisPair, DEFAULT_PAIR_CAP};

/// Default number of levels for the connectivity cross-check.
pub const DEFAULT_CONNECTIVITY_LEVELS: usize = 2;

/// Default vertex budget per level for the connectivity cross-check.
pub const DEFAULT_CONNECTIVITY_BUDGET: usize = 2000;

/// Primeness verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeVerdict {
    Prime,
    /// A maximal unlinkable pair with both `V(A)` and `V(A')` nonempty.
    NotPrime { pair: GaloisPair, v_left: BTreeSet<VertexId>, v_right: BTreeSet<VertexId> },
    /// `Omega(E, C)` has isolated points; the criterion does not apply.
    NotApplicable { isolated: Vec<IsolatedWitness> },
}

/// Whether any two vertices of each level are joined by an admissible path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConnectivityCheck {
    pub checked_levels: Vec<usize>,
    /// Levels over the vertex budget.
    pub skipped_levels: Vec<usize>,
    /// The first level with a pair of vertices not joined by an admissible path.
    pub disconnected: Option<(usize, String, String)>,
}

impl ConnectivityCheck {
    /// Whether the check agrees with a verdict: `Some(false)` on a
    /// contradiction, `None` when a non-prime verdict has no disconnected
    /// level within the checked range.
    pub fn agrees(&self, verdict: &PrimeVerdict) -> Option<bool> {
        match (verdict, &self.disconnected) {
            (PrimeVerdict::Prime, None) => Some(true),
            (PrimeVerdict::Prime, Some(_)) => Some(false),
            (PrimeVerdict::NotPrime { .. }, Some(_)) => Some(true),
            (PrimeVerdict::NotPrime { .. }, None) => None,
            (PrimeVerdict::NotApplicable { .. }, _) => None,
        }
    }
}

/// Full primeness report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeReport {
    pub verdict: PrimeVerdict,
    pub cantor: CantorReport,
    pub pairs: Vec<GaloisPair>,
    pub connectivity: ConnectivityCheck,
}

/// Pairs of vertices of `g` not joined by an admissible path, first in vertex order.
fn first_disconnected(g: &SeparatedGraph) -> Option<(VertexId, VertexId)> {
    let automaton = LetterAutomaton::new(g);
    for u in g.vertex_ids() {
        let starts: Vec<usize> = g.letters_from(u).into_iter().map(LetterAutomaton::state).collect();
        let reach = automaton.reachable_from(&starts);
        let mut hit = vec![false; g.vertex_count()];
        hit[u.idx()] = true;
        for (s, &r) in reach.iter().enumerate() {
            if r {
                hit[g.letter_range(LetterAutomaton::letter(s)).idx()] = true;
            }
        }
        if let Some(v) = g.vertex_ids().find(|v| !hit[v.idx()]) {
            return Some((u, v));
        }
    }
    None
}

/// Checks admissible connectivity of levels `0..=levels`, skipping levels
/// over `budget` vertices.
pub fn connectivity_check(g: &SeparatedGraph, levels: usize, budget: usize) -> ConnectivityCheck {
    let mut check = ConnectivityCheck::default();
    let mut t = match tower(g, 0, budget) {
        Ok(t) => t,
        Err(_) => {
            check.skipped_levels = (0..=levels).collect();
            return check;
        }
    };
    for k in 0..=levels {
        if k > t.height() && t.extend(budget).is_err() {
            check.skipped_levels = (k..=levels).collect();
            break;
        }
        let level = t.level(k);
        check.checked_levels.push(k);
        if let Some((u, v)) = first_disconnected(level) {
            check.disconnected =
                Some((k, level.vertex_name(u).to_string(), level.vertex_name(v).to_string()));
            break;
        }
    }
    check
}

/// Decides primeness of the algebras of `g` when `Omega(E, C)` is a Cantor
/// space: prime iff every maximal unlinkable pair has `V(A)` or `V(A')` empty.
pub fn is_prime(g: &SeparatedGraph) -> Result<PrimeReport, PrimeError> {
    let cantor = is_cantor(g);
    let pairs = maximal_unlinkable_pairs(g, DEFAULT_PAIR_CAP)?;
    let connectivity = connectivity_check(g, DEFAULT_CONNECTIVITY_LEVELS, DEFAULT_CONNECTIVITY_BUDGET);
    let verdict = if !cantor.cantor {
        PrimeVerdict::NotApplicable { isolated: cantor.isolated.clone() }
    } else {
        pairs
            .iter()
            .find_map(|p| {
                let (v_left, v_right) = (v_of(g, &p.left), v_of(g, &p.right));
                (!v_left.is_empty() && !v_right.is_empty())
                    .then(|| PrimeVerdict::NotPrime { pair: p.clone(), v_left, v_right })
            })
            .unwrap_or(PrimeVerdict::Prime)
    };
    Ok(PrimeReport { verdict, cantor, pairs, connectivity })
}
