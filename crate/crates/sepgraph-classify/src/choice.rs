use std::ops::ControlFlow;

use sepgraph_core::{Layer, Letter, LetterAutomaton, SeparatedGraph, VertexId, Word};

/// Outcome of the Condition (L) check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionL {
    Holds,
    /// A simple cycle whose base vertex admits no choice.
    Violated { base: VertexId, cycle: Word },
}

impl ConditionL {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionL::Holds)
    }
}

/// Whether the positive letter `l` ends a choice path: its range carries a
/// group other than `X_l` with at least two edges.
fn is_choice_end(g: &SeparatedGraph, l: Letter) -> bool {
    if l.inverse {
        return false;
    }
    let own = g.group_of(sepgraph_core::EdgeId(l.index));
    g.groups_at(g.letter_range(l)).iter().any(|&x| x != own && g.group(x).edges.len() >= 2)
}

/// For every letter state, whether some admissible continuation starting
/// with that letter ends in a choice.
fn choice_states(g: &SeparatedGraph, automaton: &LetterAutomaton) -> Vec<bool> {
    let targets: Vec<usize> =
        g.letters().into_iter().filter(|&l| is_choice_end(g, l)).map(LetterAutomaton::state).collect();
    automaton.reaching(&targets)
}

/// Vertices admitting a choice, as a mask over `E^0`.
pub fn choice_vertices(g: &SeparatedGraph) -> Vec<bool> {
    let automaton = LetterAutomaton::new(g);
    let reach = choice_states(g, &automaton);
    g.vertex_ids()
        .map(|v| g.letters_from(v).into_iter().any(|l| reach[LetterAutomaton::state(l)]))
        .collect()
}

/// Whether `v` admits a choice.
pub fn admits_choice(g: &SeparatedGraph, v: VertexId) -> bool {
    choice_vertices(g)[v.idx()]
}

/// Calls `f` on each simple cycle based at `u` until it breaks.
pub(crate) fn for_each_simple_cycle<F>(g: &SeparatedGraph, u: VertexId, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Word) -> ControlFlow<()>,
{
    let mut visited = vec![false; g.vertex_count()];
    visited[u.idx()] = true;
    let mut path: Vec<Letter> = Vec::new();
    fn step<F>(
        g: &SeparatedGraph,
        u: VertexId,
        visited: &mut [bool],
        path: &mut Vec<Letter>,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Word) -> ControlFlow<()>,
    {
        let options = match path.last() {
            None => g.letters_from(u),
            Some(&last) => g.successors(last),
        };
        for l in options {
            let next = g.letter_range(l);
            if next == u {
                let first = path.first().copied();
                if first.is_some_and(|first| g.admissible_step(l, first)) {
                    path.push(l);
                    let cycle = Word::from_letters(path.clone());
                    path.pop();
                    f(&cycle)?;
                }
                continue;
            }
            if visited[next.idx()] {
                continue;
            }
            visited[next.idx()] = true;
            path.push(l);
            let flow = step(g, u, visited, path, f);
            path.pop();
            visited[next.idx()] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
    step(g, u, &mut visited, &mut path, f)
}

/// All simple cycles based at `u`, in canonical word order.
pub fn simple_cycles_at(g: &SeparatedGraph, u: VertexId) -> Vec<Word> {
    let mut out = Vec::new();
    let _ = for_each_simple_cycle(g, u, &mut |c: &Word| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Condition (L): every simple cycle has a base vertex admitting a choice.
///
/// Only vertices without choices are searched for simple cycles; the first
/// violation in vertex order (layer 0 first) is reported.
pub fn condition_l(g: &SeparatedGraph) -> ConditionL {
    let choices = choice_vertices(g);
    let order = g.layer_vertices(Layer::Zero).chain(g.layer_vertices(Layer::One));
    for v in order {
        if choices[v.idx()] {
            continue;
        }
        let mut found = None;
        let _ = for_each_simple_cycle(g, v, &mut |c: &Word| {
            found = Some(c.clone());
            ControlFlow::Break(())
        });
        if let Some(cycle) = found {
            return ConditionL::Violated { base: v, cycle };
        }
    }
    ConditionL::Holds
}
