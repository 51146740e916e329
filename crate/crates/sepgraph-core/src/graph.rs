use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{GraphError, Location};
use crate::incidence::Incidence;
use crate::word::{Letter, Word};
use crate::WordError;

/// Index of a vertex in canonical `(layer, name)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

/// Index of an edge in canonical name order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

/// Index of an edge group; groups are ordered by range vertex, then declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub u32);

impl VertexId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> Letter {
        Letter::pos(self.0)
    }
}

impl GroupId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// The two layers of a bipartite separated graph: ranges live in layer 0 and
/// sources in layer 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Zero,
    One,
}

impl Layer {
    pub fn as_u8(self) -> u8 {
        match self {
            Layer::Zero => 0,
            Layer::One => 1,
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub layer: Layer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    pub range: VertexId,
    /// Member edges in canonical order.
    pub edges: Vec<EdgeId>,
}

/// A finite bipartite separated graph with canonical ordering.
///
/// Built through [`GraphBuilder`] or [`crate::load`]; immutable afterwards.
#[derive(Debug, Clone)]
pub struct SeparatedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    groups: Vec<Group>,
    edge_group: Vec<GroupId>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    vertex_groups: Vec<Vec<GroupId>>,
}

impl PartialEq for SeparatedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.groups == other.groups
    }
}

impl Eq for SeparatedGraph {}

impl SeparatedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.idx()]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.idx()]
    }

    pub fn group(&self, x: GroupId) -> &Group {
        &self.groups[x.idx()]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.idx()].name
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.idx()].name
    }

    pub fn layer(&self, v: VertexId) -> Layer {
        self.vertices[v.idx()].layer
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.idx()].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.idx()].range
    }

    /// The group `X_e` containing `e`.
    pub fn group_of(&self, e: EdgeId) -> GroupId {
        self.edge_group[e.idx()]
    }

    /// `s^-1(v)` in canonical order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.idx()]
    }

    /// `r^-1(v)` in canonical order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.idx()]
    }

    /// The ordered groups `C_v`.
    pub fn groups_at(&self, v: VertexId) -> &[GroupId] {
        &self.vertex_groups[v.idx()]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn layer_vertices(&self, layer: Layer) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_ids().filter(move |&v| self.layer(v) == layer)
    }

    /// Layer-1 vertices that are not the source of any edge.
    pub fn isolated_sources(&self) -> Vec<VertexId> {
        self.layer_vertices(Layer::One).filter(|&v| self.out_edges(v).is_empty()).collect()
    }

    /// Human readable warnings for degenerate but accepted input.
    pub fn warnings(&self) -> Vec<String> {
        self.isolated_sources()
            .into_iter()
            .map(|v| format!("layer-1 vertex `{}` is not the source of any edge", self.vertex_name(v)))
            .collect()
    }

    /// Source of a letter in the double graph.
    pub fn letter_source(&self, l: Letter) -> VertexId {
        let e = &self.edges[l.index as usize];
        if l.inverse {
            e.range
        } else {
            e.source
        }
    }

    /// Range of a letter in the double graph.
    pub fn letter_range(&self, l: Letter) -> VertexId {
        let e = &self.edges[l.index as usize];
        if l.inverse {
            e.source
        } else {
            e.range
        }
    }

    pub fn letter_name(&self, l: Letter) -> String {
        l.render(&self.edges[l.index as usize].name)
    }

    /// All signed edges `E^1 ∪ (E^1)^-1` in letter order.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.edges.len() as u32).flat_map(|i| [Letter::pos(i), Letter::neg(i)]).collect()
    }

    /// Letters that start a path at `v`: `s^-1(v)` at layer 1 and the
    /// inverses of `r^-1(v)` at layer 0.
    pub fn letters_from(&self, v: VertexId) -> Vec<Letter> {
        match self.layer(v) {
            Layer::One => self.out_edges(v).iter().map(|e| e.letter()).collect(),
            Layer::Zero => self.in_edges(v).iter().map(|e| Letter::neg(e.0)).collect(),
        }
    }

    /// Whether `next` may follow `prev` in an admissible path.
    ///
    /// Assumes the two letters compose in the double graph.
    pub fn admissible_step(&self, prev: Letter, next: Letter) -> bool {
        match (prev.inverse, next.inverse) {
            (true, false) => prev.index != next.index,
            (false, true) => self.edge_group[prev.index as usize] != self.edge_group[next.index as usize],
            _ => false,
        }
    }

    /// Letters that may follow `prev` in an admissible path.
    pub fn successors(&self, prev: Letter) -> Vec<Letter> {
        let v = self.letter_range(prev);
        match prev.inverse {
            true => self
                .out_edges(v)
                .iter()
                .filter(|f| f.0 != prev.index)
                .map(|f| f.letter())
                .collect(),
            false => {
                let x = self.edge_group[prev.index as usize];
                self.in_edges(v)
                    .iter()
                    .filter(|f| self.edge_group[f.idx()] != x)
                    .map(|f| Letter::neg(f.0))
                    .collect()
            }
        }
    }

    /// Checks that consecutive letters compose in the double graph.
    pub fn check_connected(&self, w: &Word) -> Result<(), WordError> {
        for (i, pair) in w.letters().windows(2).enumerate() {
            if self.letter_range(pair[0]) != self.letter_source(pair[1]) {
                return Err(WordError::DisconnectedWord { position: i });
            }
        }
        Ok(())
    }

    /// Admissibility: no `e f^-1` with `e = f` and no `e^-1 f` with `X_e = X_f`.
    pub fn is_admissible(&self, w: &Word) -> Result<bool, WordError> {
        self.check_connected(w)?;
        Ok(w.letters().windows(2).all(|pair| self.admissible_step(pair[0], pair[1])))
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(|i| self.edges[i as usize].name.as_str())
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        Word::parse(text, |name| self.edge_by_name(name).map(|e| e.0))
    }

    /// Plain incidence data (edges as `(source, range)` and groups as edge lists).
    pub fn incidence(&self) -> Incidence {
        Incidence {
            vertex_count: self.vertices.len(),
            edges: self.edges.iter().map(|e| (e.source.idx(), e.range.idx())).collect(),
            groups: self
                .groups
                .iter()
                .map(|x| (x.range.idx(), x.edges.iter().map(|e| e.idx()).collect()))
                .collect(),
        }
    }

    /// A builder pre-filled with this graph's declarations.
    pub fn to_builder(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new();
        for v in &self.vertices {
            b.vertex(&v.name, v.layer);
        }
        for e in &self.edges {
            b.edge(&e.name, self.vertex_name(e.source), self.vertex_name(e.range));
        }
        for x in &self.groups {
            let names: Vec<&str> = x.edges.iter().map(|&e| self.edge_name(e)).collect();
            b.group(self.vertex_name(x.range), &x.name, &names);
        }
        b
    }
}

#[derive(Debug, Clone)]
struct PendingVertex {
    name: String,
    layer: Layer,
    at: Location,
}

#[derive(Debug, Clone)]
struct PendingEdge {
    name: String,
    source: String,
    range: String,
    at: Location,
}

#[derive(Debug, Clone)]
struct PendingGroup {
    range: String,
    name: String,
    edges: Vec<String>,
    at: Location,
}

/// Collects declarations in any order and validates them into a canonical
/// [`SeparatedGraph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    vertices: Vec<PendingVertex>,
    edges: Vec<PendingEdge>,
    groups: Vec<PendingGroup>,
    at: Location,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.ends_with('~') && !name.chars().any(char::is_whitespace)
}

/// Edge names double as letters, so `1` is reserved for the empty word.
fn valid_edge_name(name: &str) -> bool {
    valid_name(name) && name != "1"
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Attaches a source line to the declarations that follow.
    pub fn at_line(&mut self, line: usize) -> &mut Self {
        self.at = Location::line(line);
        self
    }

    pub fn vertex(&mut self, name: &str, layer: Layer) -> &mut Self {
        self.vertices.push(PendingVertex { name: name.to_string(), layer, at: self.at });
        self
    }

    pub fn edge(&mut self, name: &str, source: &str, range: &str) -> &mut Self {
        self.edges.push(PendingEdge {
            name: name.to_string(),
            source: source.to_string(),
            range: range.to_string(),
            at: self.at,
        });
        self
    }

    pub fn group<S: AsRef<str>>(&mut self, range: &str, name: &str, edges: &[S]) -> &mut Self {
        self.groups.push(PendingGroup {
            range: range.to_string(),
            name: name.to_string(),
            edges: edges.iter().map(|e| e.as_ref().to_string()).collect(),
            at: self.at,
        });
        self
    }

    pub fn build(&self) -> Result<SeparatedGraph, GraphError> {
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !valid_name(&v.name) {
                return Err(GraphError::InvalidName { at: v.at, name: v.name.clone() });
            }
            if !seen.insert(v.name.as_str()) {
                return Err(GraphError::DuplicateName { at: v.at, name: v.name.clone() });
            }
        }
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| {
            let (va, vb) = (&self.vertices[a], &self.vertices[b]);
            (va.layer, &va.name).cmp(&(vb.layer, &vb.name))
        });
        let vertices: Vec<Vertex> = order
            .iter()
            .map(|&i| Vertex { name: self.vertices[i].name.clone(), layer: self.vertices[i].layer })
            .collect();
        let vertex_index: HashMap<String, VertexId> =
            vertices.iter().enumerate().map(|(i, v)| (v.name.clone(), VertexId(i as u32))).collect();

        let mut edge_seen = HashSet::new();
        for e in &self.edges {
            if !valid_edge_name(&e.name) {
                return Err(GraphError::InvalidName { at: e.at, name: e.name.clone() });
            }
            if !edge_seen.insert(e.name.as_str()) {
                return Err(GraphError::DuplicateName { at: e.at, name: e.name.clone() });
            }
        }
        let mut edge_order: Vec<usize> = (0..self.edges.len()).collect();
        edge_order.sort_by(|&a, &b| self.edges[a].name.cmp(&self.edges[b].name));
        let mut edges = Vec::with_capacity(self.edges.len());
        for &i in &edge_order {
            let pe = &self.edges[i];
            let lookup = |name: &str| {
                vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex { at: pe.at, name: name.to_string() })
            };
            let source = lookup(&pe.source)?;
            let range = lookup(&pe.range)?;
            if vertices[source.idx()].layer != Layer::One || vertices[range.idx()].layer != Layer::Zero {
                return Err(GraphError::LayerMismatch { at: pe.at, edge: pe.name.clone() });
            }
            edges.push(Edge { name: pe.name.clone(), source, range });
        }
        let edge_index: HashMap<String, EdgeId> =
            edges.iter().enumerate().map(|(i, e)| (e.name.clone(), EdgeId(i as u32))).collect();

        let mut group_order: Vec<usize> = (0..self.groups.len()).collect();
        let mut group_ranges = Vec::with_capacity(self.groups.len());
        for g in &self.groups {
            let range = vertex_index
                .get(&g.range)
                .copied()
                .ok_or_else(|| GraphError::UnknownVertex { at: g.at, name: g.range.clone() })?;
            group_ranges.push(range);
        }
        group_order.sort_by_key(|&i| group_ranges[i]);

        let mut edge_group: Vec<Option<GroupId>> = vec![None; edges.len()];
        let mut groups = Vec::with_capacity(self.groups.len());
        let mut names_at: HashSet<(VertexId, &str)> = HashSet::new();
        for &i in &group_order {
            let pg = &self.groups[i];
            let range = group_ranges[i];
            if !valid_name(&pg.name) {
                return Err(GraphError::InvalidName { at: pg.at, name: pg.name.clone() });
            }
            if !names_at.insert((range, pg.name.as_str())) {
                return Err(GraphError::DuplicateName { at: pg.at, name: pg.name.clone() });
            }
            if pg.edges.is_empty() {
                return Err(GraphError::EmptyGroup { at: pg.at, group: pg.name.clone() });
            }
            let id = GroupId(groups.len() as u32);
            let mut members = Vec::with_capacity(pg.edges.len());
            for name in &pg.edges {
                let e = edge_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownEdge { at: pg.at, name: name.clone() })?;
                if edges[e.idx()].range != range {
                    return Err(GraphError::GroupRangeMismatch {
                        at: pg.at,
                        edge: name.clone(),
                        vertex: pg.range.clone(),
                    });
                }
                if edge_group[e.idx()].is_some() {
                    return Err(GraphError::GroupOverlap { at: pg.at, edge: name.clone() });
                }
                edge_group[e.idx()] = Some(id);
                members.push(e);
            }
            members.sort();
            groups.push(Group { name: pg.name.clone(), range, edges: members });
        }
        let mut edge_group_final = Vec::with_capacity(edges.len());
        for (&i, slot) in edge_order.iter().zip(&edge_group) {
            match slot {
                Some(x) => edge_group_final.push(*x),
                None => {
                    return Err(GraphError::UncoveredEdge { at: self.edges[i].at, edge: self.edges[i].name.clone() })
                }
            }
        }

        let n = vertices.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.source.idx()].push(EdgeId(i as u32));
            in_edges[e.range.idx()].push(EdgeId(i as u32));
        }
        let mut vertex_groups = vec![Vec::new(); n];
        for (i, x) in groups.iter().enumerate() {
            vertex_groups[x.range.idx()].push(GroupId(i as u32));
        }
        Ok(SeparatedGraph {
            vertices,
            edges,
            groups,
            edge_group: edge_group_final,
            vertex_index,
            edge_index,
            out_edges,
            in_edges,
            vertex_groups,
        })
    }
}
