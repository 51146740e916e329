use std::collections::{BTreeSet, HashMap};

use sepgraph_bratteli::BratteliTower;
use sepgraph_core::{EdgeId, Layer, Letter, SeparatedGraph, VertexId, Word};

use crate::ball::Ball;
use crate::error::SubshiftError;

/// The vertex reached by a path from `base`.
fn endpoint(g: &SeparatedGraph, base: VertexId, w: &Word) -> VertexId {
    w.last().map(|l| g.letter_range(l)).unwrap_or(base)
}

/// The alternative local configurations a ball must add after `w`, excluding
/// the letter leading back along `w`.
fn options(g: &SeparatedGraph, base: VertexId, w: &Word, first_only: bool) -> Vec<Vec<Letter>> {
    let v = endpoint(g, base, w);
    match g.layer(v) {
        Layer::One => {
            let back = w.last().map(|l| l.index);
            vec![g.out_edges(v).iter().filter(|e| Some(e.0) != back).map(|e| e.letter()).collect()]
        }
        Layer::Zero => {
            let arrived = w.last().map(|l| g.group_of(EdgeId(l.index)));
            let mut combos: Vec<Vec<Letter>> = vec![Vec::new()];
            for &x in g.groups_at(v) {
                if Some(x) == arrived {
                    continue;
                }
                let mut next = Vec::new();
                for combo in &combos {
                    let members = &g.group(x).edges;
                    let take = if first_only { 1 } else { members.len() };
                    for &e in &members[..take] {
                        let mut c = combo.clone();
                        c.push(Letter::neg(e.0));
                        next.push(c);
                    }
                }
                combos = next;
            }
            combos
        }
    }
}

/// Grows the balls of radius `n` based at `base`; with `first_only` only the
/// first choice is taken at every branching.
fn grow(
    g: &SeparatedGraph,
    base: VertexId,
    n: usize,
    first_only: bool,
    budget: usize,
) -> Result<Vec<BTreeSet<Word>>, SubshiftError> {
    let mut partial: Vec<(BTreeSet<Word>, Vec<Word>)> = vec![(BTreeSet::from([Word::empty()]), vec![Word::empty()])];
    for _ in 0..n {
        let mut next = Vec::new();
        for (words, frontier) in partial {
            let mut branches: Vec<(BTreeSet<Word>, Vec<Word>)> = vec![(words, Vec::new())];
            for w in &frontier {
                let opts = options(g, base, w, first_only);
                let mut grown = Vec::with_capacity(branches.len() * opts.len());
                for (set, front) in &branches {
                    for opt in &opts {
                        let mut set = set.clone();
                        let mut front = front.clone();
                        for &l in opt {
                            let child = w.then(l);
                            set.insert(child.clone());
                            front.push(child);
                        }
                        grown.push((set, front));
                    }
                }
                if grown.len() > budget {
                    return Err(SubshiftError::SizeLimitExceeded { budget });
                }
                branches = grown;
            }
            next.extend(branches);
            if next.len() > budget {
                return Err(SubshiftError::SizeLimitExceeded { budget });
            }
        }
        partial = next;
    }
    Ok(partial.into_iter().map(|(set, _)| set).collect())
}

/// All `n`-balls of `Omega(E, C)`, tagged with their base vertex, in
/// canonical order. For `n = 0` this is one trivial ball per vertex.
pub fn enumerate_balls(g: &SeparatedGraph, n: usize, budget: usize) -> Result<Vec<Ball>, SubshiftError> {
    let mut out = Vec::new();
    for v in g.vertex_ids() {
        for set in grow(g, v, n, false, budget)? {
            out.push(Ball::from_set(n, set, Some(g.vertex_name(v).to_string())));
            if out.len() > budget {
                return Err(SubshiftError::SizeLimitExceeded { budget });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Checks conditions (a), (b) and (c1)/(c2) on a ball of `Omega(E, C)`:
/// every member is a path from the base, and each member of length below the
/// radius has a complete local configuration.
pub fn check_graph_ball(g: &SeparatedGraph, ball: &Ball) -> Result<(), String> {
    let base_name = ball.base().ok_or("ball has no base vertex")?;
    let base = g.vertex_by_name(base_name).ok_or_else(|| format!("unknown base `{base_name}`"))?;
    if !ball.contains(&Word::empty()) {
        return Err("missing the empty word".into());
    }
    for w in ball.words() {
        if !w.is_empty() && !ball.contains(&w.parent()) {
            return Err(format!("{} is not right-convex", g.render_word(w)));
        }
        if let Some(first) = w.first() {
            if g.letter_source(first) != base {
                return Err(format!("{} does not start at the base", g.render_word(w)));
            }
        }
        g.check_connected(w).map_err(|e| e.to_string())?;
        if w.len() >= ball.radius() {
            continue;
        }
        let local: BTreeSet<Letter> = g
            .letters()
            .into_iter()
            .filter(|&s| {
                let extended = if w.last() == Some(s.inv()) { w.parent() } else { w.then(s) };
                ball.contains(&extended)
            })
            .collect();
        let v = endpoint(g, base, w);
        let ok = match g.layer(v) {
            Layer::One => {
                let expected: BTreeSet<Letter> = g.out_edges(v).iter().map(|e| e.letter()).collect();
                local == expected
            }
            Layer::Zero => {
                local.iter().all(|l| l.inverse && g.range(EdgeId(l.index)) == v)
                    && local.len() == g.groups_at(v).len()
                    && g.groups_at(v).iter().all(|&x| {
                        local.iter().filter(|l| g.group_of(EdgeId(l.index)) == x).count() == 1
                    })
            }
        };
        if !ok {
            return Err(format!("incomplete local configuration at {}", g.render_word(w)));
        }
    }
    Ok(())
}

/// Maps a level-`k` letter to the level-`(k-1)` letter: `a^{x_i}(...)` goes to `x_i^-1`.
fn lower_letter(t: &BratteliTower, k: usize, l: Letter) -> Letter {
    let (x, _) = t.naming(k).edge_parent[l.index as usize];
    Letter { index: x.0, inverse: !l.inverse }
}

/// Maps a level-`k` vertex to the level-`(k-1)` vertex it lies over.
fn lower_vertex(t: &BratteliTower, k: usize, v: VertexId) -> VertexId {
    let naming = t.naming(k);
    match &naming.tuples[v.idx()] {
        Some((u, _)) => *u,
        None => naming.layer0_origin[v.idx()].expect("layer-0 vertices have an origin"),
    }
}

fn level_graph(t: &BratteliTower, n: usize) -> Result<&SeparatedGraph, SubshiftError> {
    Ok(t.checked_level(n)?)
}

/// `B(v)`: the `n`-ball of `Omega(E, C)` corresponding to a level-`n` vertex.
pub fn vertex_ball(t: &BratteliTower, n: usize, v: VertexId) -> Result<Ball, SubshiftError> {
    let gn = level_graph(t, n)?;
    if v.idx() >= gn.vertex_count() {
        return Err(SubshiftError::UnknownVertex(format!("#{}", v.0)));
    }
    let set = grow(gn, v, n, true, usize::MAX)?.pop().expect("one ball");
    let mut words: Vec<Word> = set.into_iter().collect();
    let mut base = v;
    for k in (1..=n).rev() {
        words = words
            .into_iter()
            .map(|w| Word::from_letters(w.letters().iter().map(|&l| lower_letter(t, k, l)).collect()))
            .collect();
        base = lower_vertex(t, k, base);
    }
    let base_name = t.level(0).vertex_name(base).to_string();
    Ok(Ball::from_set(n, words.into_iter().collect(), Some(base_name)))
}

/// `B(v)` for every vertex of level `n`, indexed by vertex.
pub fn vertex_balls(t: &BratteliTower, n: usize) -> Result<Vec<Ball>, SubshiftError> {
    let gn = level_graph(t, n)?;
    gn.vertex_ids().map(|v| vertex_ball(t, n, v)).collect()
}

/// The level-`n` vertex whose ball is `ball`.
pub fn ball_vertex(t: &BratteliTower, n: usize, ball: &Ball) -> Result<VertexId, SubshiftError> {
    let index: HashMap<Ball, VertexId> =
        vertex_balls(t, n)?.into_iter().enumerate().map(|(i, b)| (b, VertexId(i as u32))).collect();
    index.get(ball).copied().ok_or(SubshiftError::NoSuchBall)
}
