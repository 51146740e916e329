/// Plain incidence data of a (not necessarily bipartite) separated graph.
///
/// Vertices are `0..vertex_count`, edges are `(source, range)` pairs and each
/// group is `(range vertex, member edge indices)`. Closure computations on
/// single levels, on unions of Bratteli levels and on non-separated graphs all
/// go through this view.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Incidence {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub groups: Vec<(usize, Vec<usize>)>,
}

impl Incidence {
    /// Edge indices grouped by range vertex.
    pub fn in_edges(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.vertex_count];
        for (i, &(_, r)) in self.edges.iter().enumerate() {
            fibers[r].push(i);
        }
        fibers
    }

    /// Group indices grouped by range vertex.
    pub fn groups_at(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.vertex_count];
        for (i, (v, _)) in self.groups.iter().enumerate() {
            at[*v].push(i);
        }
        at
    }
}
