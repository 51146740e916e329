use std::collections::BTreeMap;

use sepgraph_core::{GroupId, Layer, SeparatedGraph, VertexId};

/// Type of a layer-0 vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexType {
    /// Exactly one group of size > 1, recorded as `X^v`.
    A(GroupId),
    /// All groups are singletons and no two of them share a source.
    B1,
    /// All groups are singletons and two of them share a source.
    B2,
    /// Two or more groups of size > 1; such a graph is not simple.
    Violation(Vec<GroupId>),
}

/// Types of all layer-0 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexTypeMap {
    pub types: BTreeMap<VertexId, VertexType>,
}

impl VertexTypeMap {
    pub fn get(&self, v: VertexId) -> Option<&VertexType> {
        self.types.get(&v)
    }

    pub fn is_type_a(&self, v: VertexId) -> bool {
        matches!(self.types.get(&v), Some(VertexType::A(_)))
    }

    pub fn is_type_b(&self, v: VertexId) -> bool {
        matches!(self.types.get(&v), Some(VertexType::B1 | VertexType::B2))
    }

    /// The first vertex with two or more big groups, if any.
    pub fn violation(&self) -> Option<(VertexId, &[GroupId])> {
        self.types.iter().find_map(|(&v, t)| match t {
            VertexType::Violation(groups) => Some((v, groups.as_slice())),
            _ => None,
        })
    }
}

/// Types every layer-0 vertex by the sizes and sources of its groups.
pub fn vertex_types(g: &SeparatedGraph) -> VertexTypeMap {
    let mut types = BTreeMap::new();
    for v in g.layer_vertices(Layer::Zero) {
        let groups = g.groups_at(v);
        let big: Vec<GroupId> = groups.iter().copied().filter(|&x| g.group(x).edges.len() > 1).collect();
        let t = match big.len() {
            0 => {
                let mut sources: Vec<VertexId> = groups.iter().map(|&x| g.source(g.group(x).edges[0])).collect();
                sources.sort();
                if sources.windows(2).any(|w| w[0] == w[1]) {
                    VertexType::B2
                } else {
                    VertexType::B1
                }
            }
            1 => VertexType::A(big[0]),
            _ => VertexType::Violation(big),
        };
        types.insert(v, t);
    }
    VertexTypeMap { types }
}
