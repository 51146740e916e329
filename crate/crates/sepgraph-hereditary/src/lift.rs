use std::collections::BTreeSet;

use sepgraph_bratteli::{BratteliError, BratteliTower, LevelNaming, OneGraph};
use sepgraph_core::{GraphBuilder, Layer, SeparatedGraph, VertexId};

use crate::closure::{is_hereditary, is_saturated};
use crate::error::HereditaryError;
use crate::vertex_set::VertexSet;

fn check(g: &SeparatedGraph, h: &VertexSet) -> Result<(), HereditaryError> {
    if !is_hereditary(g, &h.vertices) {
        return Err(HereditaryError::InputNotHereditary { level: h.level });
    }
    if !is_saturated(g, &h.vertices) {
        return Err(HereditaryError::InputNotSaturated { level: h.level });
    }
    Ok(())
}

/// Lifts a hereditary saturated set of `g` to its 1-graph `up`.
///
/// A layer-0 vertex of `up` (an old source) is kept when it was in `h`; a
/// tuple vertex `v(x_1, ..., x_k)` joins when some `s(x_j)` is in `h`, and the
/// empty tuple `v[@u]` joins when `u` is in `h`.
pub fn lift_one_level(g: &SeparatedGraph, up: &OneGraph, h: &VertexSet) -> Result<VertexSet, HereditaryError> {
    lift_with(g, &up.graph, &up.naming, h)
}

/// Lifts a set at level `h.level` of the tower to the next level.
pub fn lift_in_tower(t: &BratteliTower, h: &VertexSet) -> Result<VertexSet, HereditaryError> {
    let k = h.level;
    if k + 1 > t.height() {
        return Err(BratteliError::LevelOutOfRange { level: k + 1, height: t.height() }.into());
    }
    lift_with(t.level(k), t.level(k + 1), t.naming(k + 1), h)
}

fn lift_with(
    g: &SeparatedGraph,
    upper: &SeparatedGraph,
    naming: &LevelNaming,
    h: &VertexSet,
) -> Result<VertexSet, HereditaryError> {
    check(g, h)?;
    let mut out = BTreeSet::new();
    for v in upper.vertex_ids() {
        let inside = match upper.layer(v) {
            Layer::Zero => h.contains(naming.layer0_origin[v.idx()].expect("layer-0 origin")),
            Layer::One => {
                let (u, tuple) = naming.tuples[v.idx()].as_ref().expect("tuple of a layer-1 vertex");
                if tuple.is_empty() {
                    h.contains(*u)
                } else {
                    tuple.iter().any(|&x| h.contains(g.source(x)))
                }
            }
        };
        if inside {
            out.insert(v);
        }
    }
    Ok(VertexSet::new(h.level + 1, out))
}

/// The quotient `(E/H, C/H)`: vertices outside `H`, edges with source outside
/// `H` and groups `X/H`, all names preserved.
pub fn quotient_graph(g: &SeparatedGraph, h: &VertexSet) -> Result<SeparatedGraph, HereditaryError> {
    check(g, h)?;
    let keep = |v: VertexId| !h.contains(v);
    let mut b = GraphBuilder::new();
    for v in g.vertex_ids().filter(|&v| keep(v)) {
        b.vertex(g.vertex_name(v), g.layer(v));
    }
    for e in g.edge_ids().filter(|&e| keep(g.source(e))) {
        b.edge(g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e)));
    }
    for x in g.groups() {
        if !keep(x.range) {
            continue;
        }
        let members: Vec<&str> = x.edges.iter().filter(|&&e| keep(g.source(e))).map(|&e| g.edge_name(e)).collect();
        b.group(g.vertex_name(x.range), &x.name, &members);
    }
    Ok(b.build().expect("quotients of valid graphs by closed sets are valid"))
}
