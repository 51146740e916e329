use std::collections::BTreeSet;

use sepgraph_core::{Incidence, SeparatedGraph, VertexId};

/// Least hereditary saturated superset of `seed` in incidence data.
///
/// Heredity adds `s(e)` whenever `r(e)` is in the set; saturation adds `v`
/// once every source of some group at `v` is in the set.
pub fn closure_in(inc: &Incidence, seed: &[bool]) -> Vec<bool> {
    let n = inc.vertex_count;
    let in_edges = inc.in_edges();
    let mut out_edges = vec![Vec::new(); n];
    for (i, &(s, _)) in inc.edges.iter().enumerate() {
        out_edges[s].push(i);
    }
    let mut group_of = vec![usize::MAX; inc.edges.len()];
    let mut missing: Vec<usize> = Vec::with_capacity(inc.groups.len());
    for (gi, (_, members)) in inc.groups.iter().enumerate() {
        for &e in members {
            group_of[e] = gi;
        }
        missing.push(members.len());
    }
    let mut inside = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    for (v, &m) in seed.iter().enumerate() {
        if m {
            inside[v] = true;
            stack.push(v);
        }
    }
    while let Some(v) = stack.pop() {
        for &e in &in_edges[v] {
            let s = inc.edges[e].0;
            if !inside[s] {
                inside[s] = true;
                stack.push(s);
            }
        }
        for &e in &out_edges[v] {
            let gi = group_of[e];
            if gi == usize::MAX {
                continue;
            }
            missing[gi] -= 1;
            if missing[gi] == 0 {
                let r = inc.groups[gi].0;
                if !inside[r] {
                    inside[r] = true;
                    stack.push(r);
                }
            }
        }
    }
    inside
}

pub fn is_hereditary_in(inc: &Incidence, set: &[bool]) -> bool {
    inc.edges.iter().all(|&(s, r)| !set[r] || set[s])
}

pub fn is_saturated_in(inc: &Incidence, set: &[bool]) -> bool {
    inc.groups.iter().all(|(v, members)| set[*v] || !members.iter().all(|&e| set[inc.edges[e].0]))
}

fn mask(g: &SeparatedGraph, set: &BTreeSet<VertexId>) -> Vec<bool> {
    let mut m = vec![false; g.vertex_count()];
    for v in set {
        m[v.idx()] = true;
    }
    m
}

/// Least hereditary `C`-saturated superset of `set`.
pub fn closure_hs(g: &SeparatedGraph, set: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    closure_in(&g.incidence(), &mask(g, set))
        .into_iter()
        .enumerate()
        .filter(|(_, m)| *m)
        .map(|(i, _)| VertexId(i as u32))
        .collect()
}

pub fn is_hereditary(g: &SeparatedGraph, set: &BTreeSet<VertexId>) -> bool {
    is_hereditary_in(&g.incidence(), &mask(g, set))
}

pub fn is_saturated(g: &SeparatedGraph, set: &BTreeSet<VertexId>) -> bool {
    is_saturated_in(&g.incidence(), &mask(g, set))
}
