use std::collections::HashMap;

use sepgraph_core::{EdgeId, GraphBuilder, GroupId, Layer, SeparatedGraph, VertexId};

use crate::error::BratteliError;

/// How a level was derived from the level below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelNaming {
    /// For each layer-1 vertex of the new level, the old layer-0 vertex `u`
    /// and the tuple `(x_1, ..., x_k)` with `x_j` in the `j`-th group of `C_u`.
    /// Layer-0 vertices have `None`.
    pub tuples: Vec<Option<(VertexId, Vec<EdgeId>)>>,
    /// For each new edge `a^{x_i}(...)`, the old edge `x_i` and the slot `i`.
    pub edge_parent: Vec<(EdgeId, usize)>,
    /// For each new group `X(x)`, the old edge `x`.
    pub group_parent: Vec<EdgeId>,
    /// For each new layer-0 vertex, the old layer-1 vertex with the same name.
    pub layer0_origin: Vec<Option<VertexId>>,
}

/// The 1-graph `(E_1, C^1)` of a separated graph together with its naming map.
#[derive(Debug, Clone)]
pub struct OneGraph {
    pub graph: SeparatedGraph,
    pub naming: LevelNaming,
}

/// Number of layer-1 vertices and edges of the 1-graph, without building it.
pub fn one_graph_size(g: &SeparatedGraph) -> (u128, u128) {
    let mut vertices: u128 = 0;
    let mut edges: u128 = 0;
    for u in g.layer_vertices(Layer::Zero) {
        let groups = g.groups_at(u);
        let product: u128 = groups.iter().map(|&x| g.group(x).edges.len() as u128).product();
        vertices += product;
        edges += groups.len() as u128 * product;
    }
    (vertices, edges)
}

fn tuple_name(g: &SeparatedGraph, tuple: &[EdgeId], hole: Option<usize>) -> String {
    tuple
        .iter()
        .enumerate()
        .map(|(j, &e)| if Some(j) == hole { "_" } else { g.edge_name(e) })
        .collect::<Vec<_>>()
        .join("|")
}

/// Name of the layer-1 vertex `v(x_1, ..., x_k)`; the empty tuple over `u` is `v[@u]`.
fn vertex_name(g: &SeparatedGraph, u: VertexId, tuple: &[EdgeId]) -> String {
    if tuple.is_empty() {
        format!("v[@{}]", g.vertex_name(u))
    } else {
        format!("v[{}]", tuple_name(g, tuple, None))
    }
}

fn edge_name(g: &SeparatedGraph, tuple: &[EdgeId], slot: usize) -> String {
    format!("a[{}][{}]", g.edge_name(tuple[slot]), tuple_name(g, tuple, Some(slot)))
}

fn group_name(g: &SeparatedGraph, x: EdgeId) -> String {
    format!("X[{}]", g.edge_name(x))
}

/// Calls `f` on every tuple choosing one edge from each group, in
/// lexicographic order of the group members.
fn for_each_tuple<F: FnMut(&[EdgeId])>(g: &SeparatedGraph, groups: &[GroupId], mut f: F) {
    let members: Vec<&[EdgeId]> = groups.iter().map(|&x| g.group(x).edges.as_slice()).collect();
    let mut idx = vec![0usize; members.len()];
    let mut tuple: Vec<EdgeId> = members.iter().map(|m| m[0]).collect();
    loop {
        f(&tuple);
        let mut j = members.len();
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < members[j].len() {
                tuple[j] = members[j][idx[j]];
                break;
            }
            idx[j] = 0;
            tuple[j] = members[j][0];
        }
    }
}

/// Builds `(E_1, C^1)` without a size limit.
pub fn one_graph(g: &SeparatedGraph) -> OneGraph {
    one_graph_with_budget(g, usize::MAX).expect("unbounded budget")
}

/// Builds `(E_1, C^1)`: layer 0 is `E^{0,1}`, layer 1 holds one vertex per
/// tuple over each `u`, the edge `a^{x_i}(x)` runs from `v(x)` to `s(x_i)` and
/// `C^1_v = {X(x) : x in s^-1(v)}`.
pub fn one_graph_with_budget(g: &SeparatedGraph, budget: usize) -> Result<OneGraph, BratteliError> {
    let (new_sources, _) = one_graph_size(g);
    let old_sources = g.layer_vertices(Layer::One).count() as u128;
    let total = new_sources + old_sources;
    if total > budget as u128 {
        return Err(BratteliError::SizeLimitExceeded { level: 1, count: total, budget });
    }

    let mut b = GraphBuilder::new();
    for v in g.layer_vertices(Layer::One) {
        b.vertex(g.vertex_name(v), Layer::Zero);
    }
    let mut vertex_tuples: Vec<(String, VertexId, Vec<EdgeId>)> = Vec::new();
    let mut edge_records: Vec<(String, EdgeId, usize)> = Vec::new();
    let mut members: HashMap<EdgeId, Vec<String>> = HashMap::new();
    for u in g.layer_vertices(Layer::Zero) {
        let groups = g.groups_at(u);
        if groups.is_empty() {
            let name = vertex_name(g, u, &[]);
            b.vertex(&name, Layer::One);
            vertex_tuples.push((name, u, Vec::new()));
            continue;
        }
        for_each_tuple(g, groups, |tuple| {
            let vname = vertex_name(g, u, tuple);
            b.vertex(&vname, Layer::One);
            for (slot, &x) in tuple.iter().enumerate() {
                let ename = edge_name(g, tuple, slot);
                b.edge(&ename, &vname, g.vertex_name(g.source(x)));
                members.entry(x).or_default().push(ename.clone());
                edge_records.push((ename, x, slot));
            }
            vertex_tuples.push((vname, u, tuple.to_vec()));
        });
    }
    let mut group_records = Vec::new();
    for x in g.edge_ids() {
        if let Some(names) = members.get(&x) {
            let gname = group_name(g, x);
            b.group(g.vertex_name(g.source(x)), &gname, names);
            group_records.push((gname, x));
        }
    }
    let graph = b.build().map_err(BratteliError::Naming)?;

    let mut tuples = vec![None; graph.vertex_count()];
    for (name, u, tuple) in vertex_tuples {
        let v = graph.vertex_by_name(&name).expect("declared vertex");
        tuples[v.idx()] = Some((u, tuple));
    }
    let mut edge_parent = vec![(EdgeId(0), 0); graph.edge_count()];
    for (name, x, slot) in edge_records {
        let e = graph.edge_by_name(&name).expect("declared edge");
        edge_parent[e.idx()] = (x, slot);
    }
    let by_name: HashMap<String, EdgeId> = group_records.into_iter().collect();
    let group_parent = graph.groups().iter().map(|grp| by_name[&grp.name]).collect();
    let layer0_origin = graph
        .vertices()
        .iter()
        .map(|v| match v.layer {
            Layer::Zero => g.vertex_by_name(&v.name),
            Layer::One => None,
        })
        .collect();
    Ok(OneGraph { graph, naming: LevelNaming { tuples, edge_parent, group_parent, layer0_origin } })
}

/// Whether distinct edges in every group have distinct sources.
pub fn has_distinct_sources(g: &SeparatedGraph) -> bool {
    g.groups().iter().all(|x| {
        let mut sources: Vec<VertexId> = x.edges.iter().map(|&e| g.source(e)).collect();
        sources.sort();
        sources.windows(2).all(|w| w[0] != w[1])
    })
}
