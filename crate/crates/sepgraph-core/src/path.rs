use std::collections::VecDeque;

use crate::error::WordError;
use crate::graph::{SeparatedGraph, VertexId};
use crate::word::{Letter, Word};

/// Reduced product `p * q` of two paths in the double graph, where `q` is
/// traversed first; requires the range of `q` to be the source of `p`.
///
/// Empty words carry no endpoint information and compose with anything.
pub fn reduced_product(g: &SeparatedGraph, p: &Word, q: &Word) -> Result<Word, WordError> {
    g.check_connected(p)?;
    g.check_connected(q)?;
    if let (Some(last_q), Some(first_p)) = (q.last(), p.first()) {
        if g.letter_range(last_q) != g.letter_source(first_p) {
            return Err(WordError::EndpointMismatch);
        }
    }
    Ok(p.mul(q))
}

/// All admissible paths from `u` to `v` of length at most `maxlen`, in
/// canonical word order. The trivial path is included when `u == v`.
pub fn paths_between(g: &SeparatedGraph, u: VertexId, v: VertexId, maxlen: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if u == v {
        out.push(Word::empty());
    }
    let mut stack: Vec<Word> = if maxlen == 0 {
        Vec::new()
    } else {
        g.letters_from(u).into_iter().map(Word::single).collect()
    };
    while let Some(w) = stack.pop() {
        let last = w.last().expect("nonempty");
        if g.letter_range(last) == v {
            out.push(w.clone());
        }
        if w.len() < maxlen {
            for next in g.successors(last) {
                stack.push(w.then(next));
            }
        }
    }
    out.sort();
    out
}

/// The finite automaton on signed edges whose transitions are admissible
/// two-letter continuations.
///
/// States are numbered `2 * edge + inverse`.
#[derive(Debug, Clone)]
pub struct LetterAutomaton {
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl LetterAutomaton {
    pub fn new(g: &SeparatedGraph) -> Self {
        let n = 2 * g.edge_count();
        let mut forward = vec![Vec::new(); n];
        let mut backward = vec![Vec::new(); n];
        for l in g.letters() {
            let a = Self::state(l);
            for m in g.successors(l) {
                let b = Self::state(m);
                forward[a].push(b);
                backward[b].push(a);
            }
        }
        LetterAutomaton { forward, backward }
    }

    pub fn state(l: Letter) -> usize {
        2 * l.index as usize + l.inverse as usize
    }

    pub fn letter(state: usize) -> Letter {
        Letter { index: (state / 2) as u32, inverse: state % 2 == 1 }
    }

    pub fn state_count(&self) -> usize {
        self.forward.len()
    }

    pub fn successors(&self, state: usize) -> &[usize] {
        &self.forward[state]
    }

    /// States reachable from `starts` in zero or more steps.
    pub fn reachable_from(&self, starts: &[usize]) -> Vec<bool> {
        Self::search(&self.forward, starts)
    }

    /// States from which some state of `targets` is reachable in zero or more steps.
    pub fn reaching(&self, targets: &[usize]) -> Vec<bool> {
        Self::search(&self.backward, targets)
    }

    /// States reachable from `start` in one or more steps.
    pub fn reachable_strictly(&self, start: usize) -> Vec<bool> {
        Self::search(&self.forward, &self.forward[start])
    }

    fn search(adj: &[Vec<usize>], starts: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; adj.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in starts {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }
}
