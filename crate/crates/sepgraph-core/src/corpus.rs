use crate::graph::SeparatedGraph;
use crate::sgf::load;

/// A named example graph shipped with the crate.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry { name: "e23", text: include_str!("../corpus/e23.sgf") },
    CorpusEntry { name: "e22", text: include_str!("../corpus/e22.sgf") },
    CorpusEntry { name: "e12", text: include_str!("../corpus/e12.sgf") },
    CorpusEntry { name: "e13", text: include_str!("../corpus/e13.sgf") },
    CorpusEntry { name: "two_cycle", text: include_str!("../corpus/two_cycle.sgf") },
    CorpusEntry { name: "lamplighter", text: include_str!("../corpus/lamplighter.sgf") },
    CorpusEntry { name: "single_edge", text: include_str!("../corpus/single_edge.sgf") },
    CorpusEntry { name: "ex_dead_end", text: include_str!("../corpus/ex_dead_end.sgf") },
    CorpusEntry { name: "ex_unique_pair", text: include_str!("../corpus/ex_unique_pair.sgf") },
    CorpusEntry { name: "two_loops", text: include_str!("../corpus/two_loops.sgf") },
    CorpusEntry { name: "fork", text: include_str!("../corpus/fork.sgf") },
    CorpusEntry { name: "bare_range", text: include_str!("../corpus/bare_range.sgf") },
    CorpusEntry { name: "chain", text: include_str!("../corpus/chain.sgf") },
];

/// Names of all corpus graphs, in corpus order.
pub const CORPUS_NAMES: &[&str] = &[
    "e23",
    "e22",
    "e12",
    "e13",
    "two_cycle",
    "lamplighter",
    "single_edge",
    "ex_dead_end",
    "ex_unique_pair",
    "two_loops",
    "fork",
    "bare_range",
    "chain",
];

/// All corpus graphs with their names.
pub fn corpus() -> Vec<(&'static str, SeparatedGraph)> {
    ENTRIES
        .iter()
        .map(|e| (e.name, load(e.text).unwrap_or_else(|err| panic!("corpus graph {}: {err}", e.name))))
        .collect()
}

/// A corpus graph by name.
pub fn corpus_graph(name: &str) -> Option<SeparatedGraph> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| load(e.text).expect("corpus graphs are valid"))
}
