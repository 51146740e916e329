use std::collections::BTreeSet;

use sepgraph_bratteli::budget_from_env;
use sepgraph_core::{Layer, SeparatedGraph};
use sepgraph_hereditary::{quotient_graph, tower_ideal, VertexSet};

use crate::error::WordShiftError;
use crate::lamplighter::{vertex_word_name, LamplighterTower};
use crate::language::Language;
use crate::word::BinaryWord;

/// Levels above the candidate on which stabilization is certified.
pub const STABILIZATION_MARGIN: usize = 2;

/// A family of forbidden binary words together with the language of its
/// subshift `X_F`.
///
/// `W_n` is the set of words of length `n` containing a forbidden block, and
/// `H^(n)` consists of the words of length `n` and `n + 1` that occur in no
/// point of `X_F`; these are the vertices of level `n` in the hereditary
/// saturated set `H_F` of the lamplighter Bratteli diagram.
#[derive(Debug, Clone)]
pub struct WordIdeal {
    forbidden: BTreeSet<BinaryWord>,
    language: Language,
}

/// Outcome of the finite-type search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiniteTypeVerdict {
    /// `H_F` is generated by `H^(n)`, certified on the levels from `n` to the
    /// search bound plus the margin.
    FiniteType(usize),
    /// No level up to the bound generates `H_F` on the inspected levels.
    UnknownUpTo(usize),
}

impl WordIdeal {
    pub fn new<I: IntoIterator<Item = BinaryWord>>(forbidden: I) -> Result<Self, WordShiftError> {
        let forbidden: BTreeSet<BinaryWord> = forbidden.into_iter().collect();
        let language = Language::new(&forbidden)?;
        Ok(WordIdeal { forbidden, language })
    }

    /// The single periodic orbit of `w`: every word of length `|w|` other
    /// than the rotations of `w` is forbidden.
    pub fn periodic_orbit(w: &BinaryWord) -> Result<Self, WordShiftError> {
        let rotations = w.rotations();
        Self::new(BinaryWord::all_of_length(w.len()).into_iter().filter(|u| !rotations.contains(u)))
    }

    /// The even shift with its forbidden family `0 1^(2k+1) 0` truncated to
    /// words of length at most `max_len`.
    pub fn even_shift(max_len: usize) -> Result<Self, WordShiftError> {
        let words = (3..=max_len).step_by(2).map(|len| format!("0{}0", "1".repeat(len - 2)).parse().expect("binary"));
        Self::new(words)
    }

    pub fn forbidden(&self) -> &BTreeSet<BinaryWord> {
        &self.forbidden
    }

    pub fn language(&self) -> &Language {
        &self.language
    }

    /// Whether `w` contains a forbidden block, that is `w` lies in `W`.
    pub fn contains_forbidden(&self, w: &BinaryWord) -> bool {
        self.forbidden.iter().any(|f| w.contains_block(f))
    }

    /// `W_n`.
    pub fn w_level(&self, n: usize) -> BTreeSet<BinaryWord> {
        BinaryWord::all_of_length(n).into_iter().filter(|w| self.contains_forbidden(w)).collect()
    }

    /// Whether `w` belongs to `H_F`, that is occurs in no point of `X_F`.
    pub fn in_h(&self, w: &BinaryWord) -> bool {
        !self.language.contains(w)
    }

    /// The words of `H^(n)`: lengths `n` and `n + 1`.
    pub fn h_words(&self, n: usize) -> BTreeSet<BinaryWord> {
        [n, n + 1]
            .into_iter()
            .flat_map(BinaryWord::all_of_length)
            .filter(|w| self.in_h(w))
            .collect()
    }

    /// `H^(n)` as a vertex set of level `n` of the tower.
    pub fn hset(&self, t: &LamplighterTower, n: usize) -> VertexSet {
        let g = t.tower().level(n);
        VertexSet::new(n, g.vertex_ids().filter(|&v| self.in_h(t.word(n, v))).collect())
    }
}

/// `H_F ∩ E_n^0`, named by words: builds the lamplighter tower up to `n`.
pub fn forbidden_to_hset(ideal: &WordIdeal, n: usize) -> Result<(SeparatedGraph, VertexSet), WordShiftError> {
    let t = LamplighterTower::new(n, budget_from_env())?;
    let g = t.word_graph(n);
    let names: Vec<String> = ideal.h_words(n).iter().map(vertex_word_name).collect();
    let h = VertexSet::from_names(&g, n, &names)?;
    Ok((g, h))
}

/// Smallest `n <= bound` such that the lifts of `H^(n)` agree with `H^(m)`
/// on every level `m` from `n` to `bound + STABILIZATION_MARGIN`.
pub fn finite_type_detect(ideal: &WordIdeal, bound: usize) -> Result<FiniteTypeVerdict, WordShiftError> {
    let t = LamplighterTower::new(bound + STABILIZATION_MARGIN, budget_from_env())?;
    detect_in(ideal, &t, bound)
}

fn detect_in(ideal: &WordIdeal, t: &LamplighterTower, bound: usize) -> Result<FiniteTypeVerdict, WordShiftError> {
    let levels: Vec<VertexSet> = (0..=t.height()).map(|k| ideal.hset(t, k)).collect();
    let report = tower_ideal(t.tower(), &levels, bound)?;
    Ok(match report.finite_type {
        Some(n) => FiniteTypeVerdict::FiniteType(n),
        None => FiniteTypeVerdict::UnknownUpTo(bound),
    })
}

/// The word-named quotient `(E_n / H, C^n / H)` with `H = H^(n)`; requires
/// `H_F` to be generated at some level `<= n`.
pub fn word_quotient(ideal: &WordIdeal, n: usize) -> Result<SeparatedGraph, WordShiftError> {
    let t = LamplighterTower::new(n + STABILIZATION_MARGIN, budget_from_env())?;
    match detect_in(ideal, &t, n)? {
        FiniteTypeVerdict::FiniteType(_) => {}
        FiniteTypeVerdict::UnknownUpTo(_) => {
            return Err(WordShiftError::NotFiniteType { level: n, checked: n + STABILIZATION_MARGIN })
        }
    }
    let g = t.word_graph(n);
    let names: Vec<String> = ideal.h_words(n).iter().map(vertex_word_name).collect();
    Ok(quotient_graph(&g, &VertexSet::from_names(&g, n, &names)?)?)
}

/// Vertex names of one layer of a word-named graph, in canonical order.
pub fn layer_words(g: &SeparatedGraph, layer: Layer) -> Vec<String> {
    g.layer_vertices(layer).map(|v| g.vertex_name(v).to_string()).collect()
}
