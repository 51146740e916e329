use std::collections::{BTreeSet, HashMap};
use std::ops::ControlFlow;

use sepgraph_core::{Letter, SeparatedGraph, VertexId, Word};

use crate::choice::{choice_vertices, for_each_simple_cycle};

/// A cycle class: vertices without choices whose closed paths are the
/// powers of one simple cycle, grouped by that cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleClass {
    pub vertices: BTreeSet<VertexId>,
    /// The generating simple cycle based at the least member.
    pub cycle: Word,
}

/// Admissible paths from `v` that repeat no vertex, including the trivial one.
fn simple_paths_from(g: &SeparatedGraph, v: VertexId) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut visited = vec![false; g.vertex_count()];
    visited[v.idx()] = true;
    fn extend(g: &SeparatedGraph, w: Word, visited: &mut [bool], out: &mut Vec<Word>) {
        let options = match w.last() {
            None => unreachable!("extend starts from a nonempty word"),
            Some(last) => g.successors(last),
        };
        for l in options {
            let next = g.letter_range(l);
            if visited[next.idx()] {
                continue;
            }
            visited[next.idx()] = true;
            let longer = w.then(l);
            out.push(longer.clone());
            extend(g, longer, visited, out);
            visited[next.idx()] = false;
        }
    }
    for l in g.letters_from(v) {
        let next = g.letter_range(l);
        if visited[next.idx()] {
            continue;
        }
        visited[next.idx()] = true;
        let w = Word::single(l);
        out.push(w.clone());
        extend(g, w, &mut visited, &mut out);
        visited[next.idx()] = false;
    }
    out
}

/// Simple closed paths `gamma^-1 beta gamma` based at `v`, one per pair
/// `{alpha, alpha^-1}`, in canonical order. The representative is the
/// smaller of the two words.
pub fn simple_closed_paths(g: &SeparatedGraph, v: VertexId) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for gamma in simple_paths_from(g, v) {
        let u = match gamma.last() {
            None => v,
            Some(l) => g.letter_range(l),
        };
        let _ = for_each_simple_cycle(g, u, &mut |beta: &Word| {
            let joins = match gamma.last() {
                None => true,
                Some(last) => {
                    g.admissible_step(last, beta.first().expect("nonempty cycle"))
                        && g.admissible_step(beta.last().expect("nonempty cycle"), last.inv())
                }
            };
            if joins {
                let mut letters = gamma.letters().to_vec();
                letters.extend_from_slice(beta.letters());
                letters.extend_from_slice(gamma.inverse().letters());
                let alpha = Word::from_letters(letters);
                let inv = alpha.inverse();
                out.insert(alpha.min(inv));
            }
            ControlFlow::Continue(())
        });
    }
    out.into_iter().collect()
}

/// Rank of the subgroup of the free group on `E^1` generated by `words`,
/// computed by Stallings folding.
fn subgroup_rank(words: &[Word]) -> usize {
    if words.is_empty() {
        return 0;
    }
    let mut parent: Vec<usize> = vec![0];
    let mut edges: Vec<(usize, u32, usize)> = Vec::new();
    for w in words {
        let letters = w.letters();
        let mut at = 0;
        for (i, &l) in letters.iter().enumerate() {
            let to = if i + 1 == letters.len() {
                0
            } else {
                parent.push(parent.len());
                parent.len() - 1
            };
            if l.inverse {
                edges.push((to, l.index, at));
            } else {
                edges.push((at, l.index, to));
            }
            at = to;
        }
    }
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    loop {
        let mut outgoing: HashMap<(usize, Letter), usize> = HashMap::new();
        let mut merge = None;
        for &(s, a, r) in &edges {
            let (s, r) = (find(&mut parent, s), find(&mut parent, r));
            for (from, letter, to) in [(s, Letter::pos(a), r), (r, Letter::neg(a), s)] {
                match outgoing.get(&(from, letter)) {
                    Some(&other) if other != to => {
                        merge = Some((other, to));
                        break;
                    }
                    Some(_) => {}
                    None => {
                        outgoing.insert((from, letter), to);
                    }
                }
            }
            if merge.is_some() {
                break;
            }
        }
        match merge {
            Some((x, y)) => {
                let (x, y) = (find(&mut parent, x), find(&mut parent, y));
                parent[x.max(y)] = x.min(y);
            }
            None => break,
        }
    }
    let folded: BTreeSet<(usize, u32, usize)> =
        edges.iter().map(|&(s, a, r)| (find(&mut parent, s), a, find(&mut parent, r))).collect();
    let vertices: BTreeSet<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
    folded.len() + 1 - vertices.len()
}

/// Rank of the group of closed paths at `v`, generated by its simple
/// closed paths. Meaningful when `v` admits no choice.
pub fn closed_path_rank(g: &SeparatedGraph, v: VertexId) -> usize {
    subgroup_rank(&simple_closed_paths(g, v))
}

/// The cycle classes: vertices without choices whose closed paths are all
/// powers of a single simple cycle through the vertex, modulo lying on the
/// same cycle.
pub fn cycle_classes(g: &SeparatedGraph) -> Vec<CycleClass> {
    let choices = choice_vertices(g);
    let mut qualifying: Vec<(VertexId, Word)> = Vec::new();
    for v in g.vertex_ids() {
        if choices[v.idx()] {
            continue;
        }
        let paths = simple_closed_paths(g, v);
        if subgroup_rank(&paths) != 1 {
            continue;
        }
        let cycle = paths.iter().find(|p| {
            let first = p.first().expect("nonempty");
            let last = p.last().expect("nonempty");
            g.admissible_step(last, first)
                && cycle_vertices(g, v, p).len() == p.len()
        });
        if let Some(c) = cycle {
            qualifying.push((v, c.clone()));
        }
    }
    let mut classes: Vec<CycleClass> = Vec::new();
    let mut assigned: BTreeSet<VertexId> = BTreeSet::new();
    for (v, cycle) in &qualifying {
        if assigned.contains(v) {
            continue;
        }
        let on_cycle = cycle_vertices(g, *v, cycle);
        let vertices: BTreeSet<VertexId> =
            qualifying.iter().map(|(u, _)| *u).filter(|u| on_cycle.contains(u)).collect();
        assigned.extend(vertices.iter().copied());
        classes.push(CycleClass { vertices, cycle: cycle.clone() });
    }
    classes.sort();
    classes
}

/// Distinct vertices visited by the closed path `p` based at `v`.
fn cycle_vertices(g: &SeparatedGraph, v: VertexId, p: &Word) -> BTreeSet<VertexId> {
    std::iter::once(v).chain(p.letters().iter().map(|&l| g.letter_range(l))).collect()
}
