use std::collections::{BTreeSet, HashMap};

use sepgraph_core::{EdgeId, Layer, Letter, LetterAutomaton, SeparatedGraph, VertexId, Word};
use sepgraph_subshift::{check_graph_ball, Ball};

use crate::closure::{boundary_closure, boundary_strata, v_of};
use crate::signed::SignedEdgeSet;

/// A ball at an isolated vertex whose boundary consists of dead ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedWitness {
    pub vertex: VertexId,
    /// The radius `n_v` given by the strata of `Ā`.
    pub radius: usize,
    pub ball: Ball,
    pub boundary: SignedEdgeSet,
    /// Whether the ball is a valid ball of `Omega(E, C)` with boundary inside the dead ends.
    pub verified: bool,
}

/// Outcome of the Cantor test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CantorReport {
    pub cantor: bool,
    pub dead_ends: SignedEdgeSet,
    /// `V(A_DE)` with one witness ball per vertex.
    pub isolated: Vec<IsolatedWitness>,
}

/// Signed edges from which no choice path starts, by backward reachability
/// from the positive letters whose range carries another group of size >= 2.
pub fn dead_ends(g: &SeparatedGraph) -> SignedEdgeSet {
    let automaton = LetterAutomaton::new(g);
    let targets: Vec<usize> = g
        .letters()
        .into_iter()
        .filter(|&l| {
            !l.inverse && {
                let own = g.group_of(EdgeId(l.index));
                g.groups_at(g.letter_range(l)).iter().any(|&x| x != own && g.group(x).edges.len() >= 2)
            }
        })
        .map(LetterAutomaton::state)
        .collect();
    let reach = automaton.reaching(&targets);
    g.letters().into_iter().filter(|&l| !reach[LetterAutomaton::state(l)]).collect()
}

/// `∂B`: terminal letters of the maximal words of a ball.
pub fn ball_boundary(ball: &Ball) -> SignedEdgeSet {
    let parents: BTreeSet<Word> = ball.words().iter().filter(|w| !w.is_empty()).map(Word::parent).collect();
    ball.words()
        .iter()
        .filter(|w| !w.is_empty() && !parents.contains(*w))
        .map(|w| w.last().expect("nonempty"))
        .collect()
}

/// Builds the ball of radius `n_v` at `v` whose boundary lies in `a`, for a
/// path-closed `a` with `v in V(a)`, by always continuing with the inverse
/// edge of lowest stratum. Returns `None` when `v` is not in `V(a)`.
pub fn isolated_ball(g: &SeparatedGraph, a: &SignedEdgeSet, v: VertexId) -> Option<(usize, Ball)> {
    if !v_of(g, a).contains(&v) {
        return None;
    }
    let closed = boundary_closure(g, a);
    let mut stratum: HashMap<Letter, usize> = HashMap::new();
    for (m, s) in boundary_strata(g, a).iter().enumerate() {
        for l in s.iter() {
            stratum.entry(l).or_insert(m);
        }
    }
    let rank = |l: Letter| stratum.get(&l).copied().unwrap_or(usize::MAX);
    let best_inverse = |edges: &[EdgeId]| -> Letter {
        edges
            .iter()
            .map(|e| Letter::neg(e.0))
            .min_by_key(|&l| (!closed.contains(l), rank(l)))
            .expect("groups are nonempty")
    };
    let first: Vec<Letter> = match g.layer(v) {
        Layer::One => g.out_edges(v).iter().map(|e| e.letter()).collect(),
        Layer::Zero => g.groups_at(v).iter().map(|&x| best_inverse(&g.group(x).edges)).collect(),
    };
    let radius = match g.layer(v) {
        Layer::One => first.iter().map(|&l| rank(l)).max(),
        Layer::Zero => g.groups_at(v).iter().map(|&x| rank(best_inverse(&g.group(x).edges))).max(),
    }
    .map_or(1, |m| m.saturating_add(1))
    .min(g.vertex_count() + 2 * g.edge_count() + 1);

    let mut words: BTreeSet<Word> = first.iter().map(|&l| Word::single(l)).collect();
    let mut frontier: Vec<Word> = words.iter().cloned().collect();
    for _ in 1..radius {
        let mut next = Vec::new();
        for alpha in &frontier {
            let f = alpha.last().expect("nonempty");
            let continuations: Vec<Letter> = if f.inverse {
                let e = EdgeId(f.index);
                g.out_edges(g.source(e)).iter().filter(|&&e2| e2 != e).map(|e2| e2.letter()).collect()
            } else {
                let own = g.group_of(EdgeId(f.index));
                g.groups_at(g.range(EdgeId(f.index)))
                    .iter()
                    .filter(|&&y| y != own)
                    .map(|&y| best_inverse(&g.group(y).edges))
                    .collect()
            };
            for l in continuations {
                let w = alpha.then(l);
                words.insert(w.clone());
                next.push(w);
            }
        }
        frontier = next;
    }
    let ball = Ball::new(radius, words, Some(g.vertex_name(v).to_string())).ok()?;
    Some((radius, ball))
}

/// The Cantor test: `Omega(E, C)` has no isolated points iff `V(A_DE)` is empty.
pub fn is_cantor(g: &SeparatedGraph) -> CantorReport {
    let dead = dead_ends(g);
    let isolated = v_of(g, &dead)
        .into_iter()
        .filter_map(|v| {
            let (radius, ball) = isolated_ball(g, &dead, v)?;
            let boundary = ball_boundary(&ball);
            let verified = boundary.is_subset(&dead) && check_graph_ball(g, &ball).is_ok();
            Some(IsolatedWitness { vertex: v, radius, ball, boundary, verified })
        })
        .collect::<Vec<_>>();
    CantorReport { cantor: isolated.is_empty() && v_of(g, &dead).is_empty(), dead_ends: dead, isolated }
}
