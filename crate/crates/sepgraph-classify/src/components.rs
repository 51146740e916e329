use std::collections::BTreeSet;

use sepgraph_core::{Letter, SeparatedGraph, VertexId};

/// The partition of `E^0` into classes of 1-connected vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneComponents {
    /// Classes ordered by their least member.
    pub classes: Vec<BTreeSet<VertexId>>,
    class_of: Vec<usize>,
}

impl OneComponents {
    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.idx()]
    }

    pub fn connected(&self, u: VertexId, v: VertexId) -> bool {
        self.class_of[u.idx()] == self.class_of[v.idx()]
    }
}

fn singleton_edge(g: &SeparatedGraph, l: Letter) -> bool {
    g.group(g.group_of(sepgraph_core::EdgeId(l.index))).edges.len() == 1
}

/// Vertices reachable from `v` by admissible 1-paths, including `v`.
fn one_reach(g: &SeparatedGraph, v: VertexId) -> Vec<bool> {
    let mut seen_vertex = vec![false; g.vertex_count()];
    let mut seen_letter = vec![false; 2 * g.edge_count()];
    seen_vertex[v.idx()] = true;
    let state = |l: Letter| 2 * l.index as usize + l.inverse as usize;
    let mut stack: Vec<Letter> = g.letters_from(v).into_iter().filter(|&l| singleton_edge(g, l)).collect();
    for &l in &stack {
        seen_letter[state(l)] = true;
    }
    while let Some(l) = stack.pop() {
        seen_vertex[g.letter_range(l).idx()] = true;
        for m in g.successors(l) {
            if singleton_edge(g, m) && !seen_letter[state(m)] {
                seen_letter[state(m)] = true;
                stack.push(m);
            }
        }
    }
    seen_vertex
}

/// Classes of the 1-connectedness relation, found by admissible search
/// over letters whose edges sit in singleton groups.
pub fn one_components(g: &SeparatedGraph) -> OneComponents {
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for v in g.vertex_ids() {
        if class_of[v.idx()] != usize::MAX {
            continue;
        }
        let reach = one_reach(g, v);
        let members: BTreeSet<VertexId> =
            g.vertex_ids().filter(|u| reach[u.idx()] && class_of[u.idx()] == usize::MAX).collect();
        for u in &members {
            class_of[u.idx()] = classes.len();
        }
        classes.push(members);
    }
    OneComponents { classes, class_of }
}
