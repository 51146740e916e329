use sepgraph_core::{Incidence, Layer, SeparatedGraph, VertexId};

use crate::error::BratteliError;
use crate::one_graph::{one_graph_with_budget, LevelNaming};

/// Default per-level vertex budget.
pub const DEFAULT_MAX_VERTICES: usize = 200_000;

/// The vertex budget from `SEPGRAPH_MAX_VERTICES`, or the default.
pub fn budget_from_env() -> usize {
    std::env::var("SEPGRAPH_MAX_VERTICES")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

/// A vertex of `F_n`, named by the level where it is a range vertex (or the
/// top level for the top sources).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlobalVertex {
    pub level: usize,
    pub vertex: VertexId,
}

/// Levels `(E_0, C^0), ..., (E_n, C^n)` obtained by iterating the 1-graph.
#[derive(Debug, Clone)]
pub struct BratteliTower {
    levels: Vec<SeparatedGraph>,
    naming: Vec<LevelNaming>,
}

/// Builds levels `0..=n`, failing when a level exceeds `budget` vertices.
pub fn tower(g: &SeparatedGraph, n: usize, budget: usize) -> Result<BratteliTower, BratteliError> {
    let mut t = BratteliTower { levels: vec![g.clone()], naming: Vec::new() };
    while t.height() < n {
        t.extend(budget)?;
    }
    Ok(t)
}

impl BratteliTower {
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[SeparatedGraph] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &SeparatedGraph {
        &self.levels[k]
    }

    pub fn checked_level(&self, k: usize) -> Result<&SeparatedGraph, BratteliError> {
        self.levels.get(k).ok_or(BratteliError::LevelOutOfRange { level: k, height: self.height() })
    }

    /// Naming map of level `k >= 1` relative to level `k - 1`.
    pub fn naming(&self, k: usize) -> &LevelNaming {
        &self.naming[k - 1]
    }

    /// Adds one more level.
    pub fn extend(&mut self, budget: usize) -> Result<(), BratteliError> {
        let level = self.levels.len();
        let next = one_graph_with_budget(self.levels.last().expect("nonempty"), budget).map_err(|e| match e {
            BratteliError::SizeLimitExceeded { count, budget, .. } => {
                BratteliError::SizeLimitExceeded { level, count, budget }
            }
            other => other,
        })?;
        self.levels.push(next.graph);
        self.naming.push(next.naming);
        Ok(())
    }

    /// Layer-0 and layer-1 vertex counts per level.
    pub fn layer_sizes(&self) -> Vec<(usize, usize)> {
        self.levels
            .iter()
            .map(|g| (g.layer_vertices(Layer::Zero).count(), g.layer_vertices(Layer::One).count()))
            .collect()
    }

    fn offsets(&self, n: usize) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(n + 2);
        let mut acc = 0;
        for k in 0..=n {
            offsets.push(acc);
            acc += self.levels[k].layer_vertices(Layer::Zero).count();
        }
        offsets.push(acc);
        offsets
    }

    /// Index of a level-`k` vertex among the vertices of `F_n` (`k <= n`).
    pub fn global_index(&self, n: usize, k: usize, v: VertexId) -> usize {
        let offsets = self.offsets(n);
        self.global_index_with(&offsets, k, v)
    }

    fn global_index_with(&self, offsets: &[usize], k: usize, v: VertexId) -> usize {
        let g = &self.levels[k];
        let zeros = offsets[k + 1] - offsets[k];
        match g.layer(v) {
            Layer::Zero => offsets[k] + v.idx(),
            Layer::One => offsets[k + 1] + (v.idx() - zeros),
        }
    }

    /// The vertices of `F_n` in global order.
    pub fn union_vertices(&self, n: usize) -> Vec<GlobalVertex> {
        let mut out = Vec::new();
        for k in 0..=n {
            out.extend(self.levels[k].layer_vertices(Layer::Zero).map(|v| GlobalVertex { level: k, vertex: v }));
        }
        out.extend(self.levels[n].layer_vertices(Layer::One).map(|v| GlobalVertex { level: n, vertex: v }));
        out
    }

    /// `(F_n, D^n)` as incidence data over the global vertex order.
    pub fn union_incidence(&self, n: usize) -> Incidence {
        let offsets = self.offsets(n);
        let mut inc = Incidence { vertex_count: *offsets.last().unwrap(), ..Incidence::default() };
        inc.vertex_count += self.levels[n].layer_vertices(Layer::One).count();
        for k in 0..=n {
            let g = &self.levels[k];
            let base = inc.edges.len();
            for e in g.edges() {
                inc.edges.push((self.global_index_with(&offsets, k, e.source), self.global_index_with(&offsets, k, e.range)));
            }
            for x in g.groups() {
                inc.groups.push((
                    self.global_index_with(&offsets, k, x.range),
                    x.edges.iter().map(|e| base + e.idx()).collect(),
                ));
            }
        }
        inc
    }
}
