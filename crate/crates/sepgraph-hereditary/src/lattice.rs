use std::collections::BTreeSet;

use sepgraph_core::{SeparatedGraph, VertexId};

use crate::closure::closure_in;
use crate::error::HereditaryError;

/// Default cap on the number of closed sets.
pub const DEFAULT_LATTICE_CAP: usize = 1 << 20;

/// The lattice of hereditary saturated sets with its Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HLattice {
    /// Closed sets ordered by size, then members.
    pub sets: Vec<BTreeSet<VertexId>>,
    /// Covering pairs `(lower, upper)` as indices into `sets`.
    pub covers: Vec<(usize, usize)>,
    pub vertex_count: usize,
}

impl HLattice {
    /// Whether only the empty and the full set are closed.
    pub fn is_trivial(&self) -> bool {
        self.sets.iter().all(|s| s.is_empty() || s.len() == self.vertex_count)
    }

    /// Indices of the closed sets covered by the full vertex set.
    pub fn maximal_proper(&self) -> Vec<usize> {
        match self.sets.iter().position(|s| s.len() == self.vertex_count) {
            Some(top) => self.covers.iter().filter(|&&(_, u)| u == top).map(|&(l, _)| l).collect(),
            None => Vec::new(),
        }
    }

    pub fn contains(&self, set: &BTreeSet<VertexId>) -> bool {
        self.sets.contains(set)
    }
}

/// All hereditary saturated sets, by Ganter's next-closure enumeration.
pub fn closed_sets(g: &SeparatedGraph, cap: usize) -> Result<Vec<BTreeSet<VertexId>>, HereditaryError> {
    let inc = g.incidence();
    let n = g.vertex_count();
    let mut current = closure_in(&inc, &vec![false; n]);
    let mut masks = vec![current.clone()];
    loop {
        let mut next = None;
        for i in (0..n).rev() {
            if current[i] {
                current[i] = false;
                continue;
            }
            let mut candidate = current.clone();
            candidate[i] = true;
            let closed = closure_in(&inc, &candidate);
            if (0..i).all(|j| closed[j] == current[j]) {
                next = Some(closed);
                break;
            }
        }
        match next {
            Some(closed) => {
                if masks.len() >= cap {
                    return Err(HereditaryError::SizeLimitExceeded { cap });
                }
                masks.push(closed.clone());
                current = closed;
            }
            None => break,
        }
    }
    let mut sets: Vec<BTreeSet<VertexId>> = masks
        .into_iter()
        .map(|m| m.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| VertexId(i as u32)).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

/// The lattice `H(E, C)` of hereditary saturated sets with covering relation.
pub fn enumerate_hsets(g: &SeparatedGraph, cap: usize) -> Result<HLattice, HereditaryError> {
    let sets = closed_sets(g, cap)?;
    let n = g.vertex_count();
    let words = n.div_ceil(64).max(1);
    let bits: Vec<Vec<u64>> = sets
        .iter()
        .map(|s| {
            let mut b = vec![0u64; words];
            for v in s {
                b[v.idx() / 64] |= 1 << (v.idx() % 64);
            }
            b
        })
        .collect();
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut covers = Vec::new();
    for i in 0..sets.len() {
        let uppers: Vec<usize> =
            (0..sets.len()).filter(|&j| sets[j].len() > sets[i].len() && subset(&bits[i], &bits[j])).collect();
        for &j in &uppers {
            let between = uppers.iter().any(|&k| k != j && sets[k].len() < sets[j].len() && subset(&bits[k], &bits[j]));
            if !between {
                covers.push((i, j));
            }
        }
    }
    Ok(HLattice { sets, covers, vertex_count: n })
}
