//! Seeded random separated graphs shared by the workspace tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepgraph_core::{GraphBuilder, Layer, SeparatedGraph};

pub use rand;
pub use rand_chacha::ChaCha8Rng as Rng8;

/// Size limits for [`random_graph`].
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_range: usize,
    pub max_source: usize,
    pub max_edges: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape { max_range: 3, max_source: 3, max_edges: 6 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random bipartite separated graph; every layer-1 vertex gets at least one
/// edge when `cover_sources` is set.
pub fn random_graph<R: Rng>(rng: &mut R, shape: Shape, cover_sources: bool) -> SeparatedGraph {
    let n0 = rng.gen_range(1..=shape.max_range);
    let n1 = rng.gen_range(1..=shape.max_source);
    let mut b = GraphBuilder::new();
    for i in 0..n0 {
        b.vertex(&format!("u{i}"), Layer::Zero);
    }
    for i in 0..n1 {
        b.vertex(&format!("s{i}"), Layer::One);
    }
    let min_edges = if cover_sources { n1 } else { 0 };
    let m = rng.gen_range(min_edges..=shape.max_edges.max(min_edges));
    let mut fibers: Vec<Vec<String>> = vec![Vec::new(); n0];
    for i in 0..m {
        let s = if cover_sources && i < n1 { i } else { rng.gen_range(0..n1) };
        let r = rng.gen_range(0..n0);
        let name = format!("e{i}");
        b.edge(&name, &format!("s{s}"), &format!("u{r}"));
        fibers[r].push(name);
    }
    for (r, mut fiber) in fibers.into_iter().enumerate() {
        fiber.shuffle(rng);
        let mut k = 0;
        while !fiber.is_empty() {
            let take = rng.gen_range(1..=fiber.len());
            let part: Vec<String> = fiber.drain(..take).collect();
            b.group(&format!("u{r}"), &format!("X{k}"), &part);
            k += 1;
        }
    }
    b.build().expect("random graphs are valid")
}
