use std::collections::BTreeSet;

use sepgraph_core::{Letter, LetterAutomaton, SeparatedGraph};

use crate::error::PrimeError;
use crate::signed::SignedEdgeSet;

/// Default cap on the number of Galois-closed sets.
pub const DEFAULT_PAIR_CAP: usize = 1 << 16;

/// The linkability relation on signed edges: `sigma` and `sigma'` are linked
/// when `sigma^-1 alpha sigma'` is admissible for some admissible `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkRelation {
    letters: Vec<Letter>,
    linked: Vec<Vec<bool>>,
}

impl LinkRelation {
    /// Decides linkability exactly: `sigma^-1` must be reachable from
    /// `sigma'` in the automaton of admissible two-letter steps.
    pub fn new(g: &SeparatedGraph) -> Self {
        let automaton = LetterAutomaton::new(g);
        let letters = g.letters();
        let linked = letters
            .iter()
            .map(|&from| {
                let reach = automaton.reachable_strictly(LetterAutomaton::state(from));
                letters.iter().map(|&to| reach[LetterAutomaton::state(to.inv())]).collect()
            })
            .collect();
        LinkRelation { letters, linked }
    }

    /// Whether `sigma` and `sigma_prime` can be linked.
    pub fn linked(&self, sigma: Letter, sigma_prime: Letter) -> bool {
        self.linked[LetterAutomaton::state(sigma_prime)][LetterAutomaton::state(sigma)]
    }

    /// Whether some member of `a` can be linked with some member of `b`.
    pub fn sets_linked(&self, a: &SignedEdgeSet, b: &SignedEdgeSet) -> bool {
        a.iter().any(|s| b.iter().any(|t| self.linked(s, t)))
    }

    /// Signed edges linked with no signed edge at all.
    pub fn inert(&self) -> SignedEdgeSet {
        self.letters.iter().copied().filter(|&s| self.letters.iter().all(|&t| !self.linked(s, t))).collect()
    }

    /// `A'`: the signed edges linked with no member of `a`.
    pub fn polar(&self, a: &SignedEdgeSet) -> SignedEdgeSet {
        self.letters.iter().copied().filter(|&t| a.iter().all(|s| !self.linked(s, t))).collect()
    }
}

/// A maximal unlinkable pair `(A, A')` with `A = A''`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GaloisPair {
    pub left: SignedEdgeSet,
    pub right: SignedEdgeSet,
    /// One side consists of inert signed edges only (possibly none), so the
    /// other side is the whole signed edge set.
    pub degenerate: bool,
}

impl GaloisPair {
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// All maximal unlinkable pairs, one per unordered pair `{A, A'}`, found by
/// closing the polars of single signed edges under intersection.
pub fn maximal_unlinkable_pairs(g: &SeparatedGraph, cap: usize) -> Result<Vec<GaloisPair>, PrimeError> {
    let relation = LinkRelation::new(g);
    let mut family: BTreeSet<SignedEdgeSet> = BTreeSet::from([SignedEdgeSet::all(g)]);
    for s in g.letters() {
        let polar = relation.polar(&[s].into_iter().collect());
        let mut added = Vec::new();
        for f in &family {
            let meet: SignedEdgeSet = f.0.intersection(&polar.0).copied().collect();
            if !family.contains(&meet) {
                added.push(meet);
            }
        }
        family.extend(added);
        if family.len() > cap {
            return Err(PrimeError::PairCapExceeded { cap });
        }
    }
    let inert = relation.inert();
    let mut pairs: BTreeSet<GaloisPair> = BTreeSet::new();
    for a in family {
        let b = relation.polar(&a);
        let (left, right) = if a <= b { (a, b) } else { (b, a) };
        let degenerate = left.is_subset(&inert) || right.is_subset(&inert);
        pairs.insert(GaloisPair { left, right, degenerate });
    }
    Ok(pairs.into_iter().collect())
}
