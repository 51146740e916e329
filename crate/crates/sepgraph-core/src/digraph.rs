use std::collections::HashMap;

use crate::incidence::Incidence;

/// A finite directed graph without separation (every range fiber is one group).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiGraph {
    pub vertices: Vec<String>,
    /// `(name, source, range)` with indices into `vertices`.
    pub edges: Vec<(String, usize, usize)>,
}

impl DiGraph {
    pub fn vertex_index(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }

    /// Incidence view with the trivial separation `C_v = {r^-1(v)}`.
    pub fn incidence(&self) -> Incidence {
        let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (i, (_, _, r)) in self.edges.iter().enumerate() {
            fibers[*r].push(i);
        }
        Incidence {
            vertex_count: self.vertices.len(),
            edges: self.edges.iter().map(|(_, s, r)| (*s, *r)).collect(),
            groups: fibers.into_iter().enumerate().filter(|(_, f)| !f.is_empty()).collect(),
        }
    }
}
