use std::collections::{BTreeSet, VecDeque};

use sepgraph_core::{Layer, Letter, SeparatedGraph, VertexId};

use crate::signed::SignedEdgeSet;

/// Least path-closed superset of `a`.
pub fn path_closure(g: &SeparatedGraph, a: &SignedEdgeSet) -> SignedEdgeSet {
    let mut out = a.clone();
    let mut queue: VecDeque<Letter> = a.iter().collect();
    while let Some(l) = queue.pop_front() {
        for m in g.successors(l) {
            if out.0.insert(m) {
                queue.push_back(m);
            }
        }
    }
    out
}

/// Signed edges outside `a` forced in by one application of the boundary rules:
/// `e^-1` when every other edge of `s^-1(s(e))` is in `a` (and there are at
/// least two), and every `x in X` when each other group `Y in C_v` meets `a`
/// in an inverse (and there are at least two groups).
pub(crate) fn boundary_rule_additions(g: &SeparatedGraph, a: &SignedEdgeSet) -> Vec<Letter> {
    let mut out = Vec::new();
    for v in g.layer_vertices(Layer::One) {
        let outs = g.out_edges(v);
        if outs.len() < 2 {
            continue;
        }
        for &e in outs {
            let inv = Letter::neg(e.0);
            if !a.contains(inv) && outs.iter().all(|&f| f == e || a.contains(f.letter())) {
                out.push(inv);
            }
        }
    }
    for v in g.layer_vertices(Layer::Zero) {
        let groups = g.groups_at(v);
        if groups.len() < 2 {
            continue;
        }
        let hit: Vec<bool> =
            groups.iter().map(|&y| g.group(y).edges.iter().any(|&e| a.contains(Letter::neg(e.0)))).collect();
        for (i, &x) in groups.iter().enumerate() {
            if hit.iter().enumerate().all(|(j, &h)| j == i || h) {
                out.extend(g.group(x).edges.iter().map(|e| e.letter()).filter(|&l| !a.contains(l)));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Least boundary-closed superset `Ā` of `a`.
pub fn boundary_closure(g: &SeparatedGraph, a: &SignedEdgeSet) -> SignedEdgeSet {
    let mut current = path_closure(g, a);
    loop {
        let added = boundary_rule_additions(g, &current);
        if added.is_empty() {
            return current;
        }
        current.0.extend(added);
        current = path_closure(g, &current);
    }
}

/// The strata `A_0 = A, A_1, ...` obtained by applying only the two boundary
/// rules round by round; for path-closed `A` their union is `Ā`.
pub fn boundary_strata(g: &SeparatedGraph, a: &SignedEdgeSet) -> Vec<SignedEdgeSet> {
    let mut strata = vec![a.clone()];
    let mut union = a.clone();
    loop {
        let added = boundary_rule_additions(g, &union);
        if added.is_empty() {
            return strata;
        }
        union.0.extend(added.iter().copied());
        strata.push(added.into_iter().collect());
    }
}

/// `V(A)`: range vertices all of whose groups meet `Ā` in an inverse edge,
/// and source vertices whose outgoing edges all lie in `Ā`.
pub fn v_of(g: &SeparatedGraph, a: &SignedEdgeSet) -> BTreeSet<VertexId> {
    let closed = boundary_closure(g, a);
    g.vertex_ids()
        .filter(|&v| match g.layer(v) {
            Layer::Zero => g
                .groups_at(v)
                .iter()
                .all(|&x| g.group(x).edges.iter().any(|&e| closed.contains(Letter::neg(e.0)))),
            Layer::One => g.out_edges(v).iter().all(|&e| closed.contains(e.letter())),
        })
        .collect()
}
