use std::collections::BTreeSet;

use sepgraph_core::{Letter, SeparatedGraph};

use crate::error::PrimeError;

/// A set of signed edges `A ⊆ E^1 ∪ (E^1)^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedEdgeSet(pub BTreeSet<Letter>);

impl SignedEdgeSet {
    pub fn empty() -> Self {
        SignedEdgeSet(BTreeSet::new())
    }

    /// Every signed edge of `g`.
    pub fn all(g: &SeparatedGraph) -> Self {
        SignedEdgeSet(g.letters().into_iter().collect())
    }

    /// Parses names such as `x1` and `y3~`.
    pub fn from_names<S: AsRef<str>>(g: &SeparatedGraph, names: &[S]) -> Result<Self, PrimeError> {
        names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                let (base, inverse) = match n.strip_suffix('~') {
                    Some(b) => (b, true),
                    None => (n, false),
                };
                let e = g.edge_by_name(base).ok_or_else(|| PrimeError::UnknownEdge(n.to_string()))?;
                Ok(if inverse { Letter::neg(e.0) } else { Letter::pos(e.0) })
            })
            .collect::<Result<BTreeSet<_>, _>>()
            .map(SignedEdgeSet)
    }

    /// Member names in letter order.
    pub fn names(&self, g: &SeparatedGraph) -> Vec<String> {
        self.0.iter().map(|&l| g.letter_name(l)).collect()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &SignedEdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Closed under `i_d(alpha) in A => t_d(alpha) in A` for admissible `alpha`.
    pub fn is_path_closed(&self, g: &SeparatedGraph) -> bool {
        self.iter().all(|l| g.successors(l).into_iter().all(|m| self.contains(m)))
    }

    /// Path closed and closed under the two boundary rules.
    pub fn is_boundary_closed(&self, g: &SeparatedGraph) -> bool {
        self.is_path_closed(g) && crate::closure::boundary_rule_additions(g, self).is_empty()
    }
}

impl FromIterator<Letter> for SignedEdgeSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        SignedEdgeSet(iter.into_iter().collect())
    }
}
