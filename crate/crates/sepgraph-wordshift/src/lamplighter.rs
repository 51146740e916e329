use std::collections::HashMap;

use sepgraph_bratteli::{tower, BratteliTower};
use sepgraph_core::{EdgeId, GraphBuilder, Layer, SeparatedGraph, VertexId};

use crate::error::WordShiftError;
use crate::word::BinaryWord;

/// The two kinds of lamplighter edges: `alpha` acts as the identity on
/// sequences and `beta` as a shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Alpha,
    Beta,
}

/// Which letter of its source word an edge removes to reach its range word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DropSide {
    First,
    Last,
}

impl DropSide {
    fn opposite(self) -> Self {
        match self {
            DropSide::First => DropSide::Last,
            DropSide::Last => DropSide::First,
        }
    }
}

/// Kind of the level-`n` edge removing the letter on `side`: at even levels
/// `alpha` removes the last letter, at odd levels the first one.
pub fn kind_at_level(n: usize, side: DropSide) -> EdgeKind {
    match (n.is_multiple_of(2), side) {
        (true, DropSide::Last) | (false, DropSide::First) => EdgeKind::Alpha,
        _ => EdgeKind::Beta,
    }
}

/// The lamplighter graph: range `v`, sources `0` and `1`, `C_v = {X, Y}` with
/// `X = {a0, a1}` and `Y = {b0, b1}`.
pub fn lamplighter_graph() -> SeparatedGraph {
    let mut b = GraphBuilder::new();
    b.vertex("v", Layer::Zero).vertex("0", Layer::One).vertex("1", Layer::One);
    for i in ["0", "1"] {
        b.edge(&format!("a{i}"), i, "v").edge(&format!("b{i}"), i, "v");
    }
    b.group("v", "X", &["a0", "a1"]).group("v", "Y", &["b0", "b1"]);
    b.build().expect("the lamplighter graph is valid")
}

/// Vertex name of a word in word-named levels; the empty word is `v`.
pub fn vertex_word_name(w: &BinaryWord) -> String {
    if w.is_empty() {
        "v".to_string()
    } else {
        w.to_string()
    }
}

/// Edge name `a_w` or `b_w` of the edge of the given kind with source word `w`.
pub fn edge_word_name(kind: EdgeKind, source: &BinaryWord) -> String {
    match kind {
        EdgeKind::Alpha => format!("a_{source}"),
        EdgeKind::Beta => format!("b_{source}"),
    }
}

#[derive(Debug, Clone)]
struct LevelWords {
    words: Vec<BinaryWord>,
    index: HashMap<BinaryWord, VertexId>,
    edges: Vec<(EdgeKind, DropSide)>,
}

/// The Bratteli tower of the lamplighter graph with every vertex named by a
/// binary word: level `n` has the words of length `n` in layer 0 and those of
/// length `n + 1` in layer 1.
///
/// A tuple vertex over the word `z` picks one edge whose source is `z`
/// extended on the left and one whose source is `z` extended on the right;
/// its word is `z` extended on both sides. Each new edge removes the letter
/// on the side opposite to the side removed by its parent edge.
#[derive(Debug, Clone)]
pub struct LamplighterTower {
    tower: BratteliTower,
    levels: Vec<LevelWords>,
}

impl LamplighterTower {
    /// Levels `0..=n` within the per-level vertex budget.
    pub fn new(n: usize, budget: usize) -> Result<Self, WordShiftError> {
        let base = lamplighter_graph();
        let words: Vec<BinaryWord> = base
            .vertex_ids()
            .map(|v| match base.layer(v) {
                Layer::Zero => BinaryWord::empty(),
                Layer::One => base.vertex_name(v).parse().expect("binary source names"),
            })
            .collect();
        let edges = base
            .edge_ids()
            .map(|e| match base.edge_name(e).starts_with('a') {
                true => (EdgeKind::Alpha, DropSide::Last),
                false => (EdgeKind::Beta, DropSide::First),
            })
            .collect();
        let mut t = LamplighterTower { tower: tower(&base, 0, budget)?, levels: vec![Self::indexed(words, edges)] };
        t.extend_to(n, budget)?;
        Ok(t)
    }

    fn indexed(words: Vec<BinaryWord>, edges: Vec<(EdgeKind, DropSide)>) -> LevelWords {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), VertexId(i as u32))).collect();
        LevelWords { words, index, edges }
    }

    /// Adds levels until the height is at least `n`.
    pub fn extend_to(&mut self, n: usize, budget: usize) -> Result<(), WordShiftError> {
        while self.height() < n {
            self.tower.extend(budget)?;
            let k = self.height();
            let lower = &self.levels[k - 1];
            let below = self.tower.level(k - 1);
            let naming = self.tower.naming(k);
            let g = self.tower.level(k);
            let words = g
                .vertex_ids()
                .map(|v| match (naming.layer0_origin[v.idx()], &naming.tuples[v.idx()]) {
                    (Some(origin), _) => lower.words[origin.idx()].clone(),
                    (None, Some((u, tuple))) => {
                        let mut bytes = lower.words[u.idx()].bytes().to_vec();
                        for &x in tuple {
                            let source = lower.words[below.source(x).idx()].bytes();
                            match lower.edges[x.idx()].1 {
                                DropSide::First => bytes.insert(0, source[0]),
                                DropSide::Last => bytes.push(source[source.len() - 1]),
                            }
                        }
                        BinaryWord::from_bytes(&bytes)
                    }
                    (None, None) => unreachable!("every vertex has an origin or a tuple"),
                })
                .collect();
            let edges = naming
                .edge_parent
                .iter()
                .map(|&(x, _)| {
                    let side = lower.edges[x.idx()].1.opposite();
                    (kind_at_level(k, side), side)
                })
                .collect();
            self.levels.push(Self::indexed(words, edges));
        }
        Ok(())
    }

    pub fn height(&self) -> usize {
        self.tower.height()
    }

    pub fn tower(&self) -> &BratteliTower {
        &self.tower
    }

    pub fn word(&self, k: usize, v: VertexId) -> &BinaryWord {
        &self.levels[k].words[v.idx()]
    }

    /// The level-`k` vertex named by `w`, if `w` has length `k` or `k + 1`.
    pub fn vertex_of(&self, k: usize, w: &BinaryWord) -> Option<VertexId> {
        self.levels[k].index.get(w).copied()
    }

    pub fn edge_kind(&self, k: usize, e: EdgeId) -> EdgeKind {
        self.levels[k].edges[e.idx()].0
    }

    pub fn drop_side(&self, k: usize, e: EdgeId) -> DropSide {
        self.levels[k].edges[e.idx()].1
    }

    /// Level `k` with vertices named by words, edges `a_w` / `b_w` named by
    /// kind and source word, and groups `X` (alpha) and `Y` (beta).
    pub fn word_graph(&self, k: usize) -> SeparatedGraph {
        let g = self.tower.level(k);
        let vname = |v: VertexId| vertex_word_name(self.word(k, v));
        let ename = |e: EdgeId| edge_word_name(self.edge_kind(k, e), self.word(k, g.source(e)));
        let mut b = GraphBuilder::new();
        for v in g.vertex_ids() {
            b.vertex(&vname(v), g.layer(v));
        }
        for e in g.edge_ids() {
            b.edge(&ename(e), &vname(g.source(e)), &vname(g.range(e)));
        }
        for x in g.groups() {
            let members: Vec<String> = x.edges.iter().map(|&e| ename(e)).collect();
            let name = match self.edge_kind(k, x.edges[0]) {
                EdgeKind::Alpha => "X",
                EdgeKind::Beta => "Y",
            };
            b.group(&vname(x.range), name, &members);
        }
        b.build().expect("word names are distinct within a level")
    }
}
