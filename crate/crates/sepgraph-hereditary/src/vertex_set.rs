use std::collections::BTreeSet;

use sepgraph_core::{SeparatedGraph, VertexId};

use crate::error::HereditaryError;

/// A set of vertices of one tower level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    pub level: usize,
    pub vertices: BTreeSet<VertexId>,
}

impl VertexSet {
    pub fn new(level: usize, vertices: BTreeSet<VertexId>) -> Self {
        VertexSet { level, vertices }
    }

    pub fn empty(level: usize) -> Self {
        VertexSet { level, vertices: BTreeSet::new() }
    }

    pub fn full(level: usize, g: &SeparatedGraph) -> Self {
        VertexSet { level, vertices: g.vertex_ids().collect() }
    }

    pub fn from_names<S: AsRef<str>>(g: &SeparatedGraph, level: usize, names: &[S]) -> Result<Self, HereditaryError> {
        let vertices = names
            .iter()
            .map(|n| g.vertex_by_name(n.as_ref()).ok_or_else(|| HereditaryError::UnknownVertex(n.as_ref().to_string())))
            .collect::<Result<_, _>>()?;
        Ok(VertexSet { level, vertices })
    }

    /// Member names in canonical vertex order.
    pub fn names(&self, g: &SeparatedGraph) -> Vec<String> {
        self.vertices.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in &self.vertices {
            mask[v.idx()] = true;
        }
        mask
    }

    pub fn from_mask(level: usize, mask: &[bool]) -> Self {
        VertexSet {
            level,
            vertices: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| VertexId(i as u32)).collect(),
        }
    }
}
