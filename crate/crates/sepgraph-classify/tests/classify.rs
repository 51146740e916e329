use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use sepgraph_bratteli::{tower, DEFAULT_MAX_VERTICES};
use sepgraph_classify::{
    choice_vertices, classify_simplicity, closed_path_rank, condition_l, cycle_classes, one_components,
    simple_closed_paths, simple_cycles_at, vertex_types, ConditionL, SimplicityVerdict, VertexType, DEFAULT_BOUND,
};
use sepgraph_core::{corpus, corpus_graph, paths_between, Layer, Letter, SeparatedGraph, VertexId, Word};
use sepgraph_hereditary::{is_hereditary, is_saturated, is_hereditary_in, is_saturated_in};
use sepgraph_testkit::{random_graph, rng, Shape};

fn vid(g: &SeparatedGraph, name: &str) -> VertexId {
    g.vertex_by_name(name).unwrap_or_else(|| panic!("no vertex {name}"))
}

/// Choice oracle: depth-first search over admissible paths from `v` for
/// one whose last letter is a positive edge with a different big group at
/// its range. Paths longer than the number of signed edges are not needed.
fn brute_choice(g: &SeparatedGraph, v: VertexId) -> bool {
    fn ends_in_choice(g: &SeparatedGraph, e: Letter) -> bool {
        let own = g.group_of(sepgraph_core::EdgeId(e.index));
        !e.inverse && g.groups_at(g.letter_range(e)).iter().any(|&x| x != own && g.group(x).edges.len() >= 2)
    }
    fn search(g: &SeparatedGraph, last: Letter, depth: usize) -> bool {
        ends_in_choice(g, last) || (depth > 0 && g.successors(last).into_iter().any(|l| search(g, l, depth - 1)))
    }
    let bound = 2 * g.edge_count();
    g.letters_from(v).into_iter().any(|l| search(g, l, bound))
}

fn brute_simple_cycles(g: &SeparatedGraph, u: VertexId) -> Vec<Word> {
    let mut out: Vec<Word> = paths_between(g, u, u, g.vertex_count())
        .into_iter()
        .filter(|p| !p.is_empty())
        .filter(|p| g.admissible_step(p.last().unwrap(), p.first().unwrap()))
        .filter(|p| {
            let inner: Vec<VertexId> = p.letters()[..p.len() - 1].iter().map(|&l| g.letter_range(l)).collect();
            let distinct: BTreeSet<VertexId> = inner.iter().copied().chain([u]).collect();
            distinct.len() == inner.len() + 1
        })
        .collect();
    out.sort();
    out
}

/// Union-find over the undirected edges lying in singleton groups.
fn brute_components(g: &SeparatedGraph) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in g.edge_ids() {
        if g.group(g.group_of(e)).edges.len() == 1 {
            let (a, b) = (find(&mut parent, g.source(e).idx()), find(&mut parent, g.range(e).idx()));
            parent[a] = b;
        }
    }
    (0..g.vertex_count()).map(|v| find(&mut parent, v)).collect()
}

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    let mut map: HashMap<usize, usize> = HashMap::new();
    let mut back: HashMap<usize, usize> = HashMap::new();
    a.iter().zip(b).all(|(&x, &y)| *map.entry(x).or_insert(y) == y && *back.entry(y).or_insert(x) == x)
}

fn random_graphs_small(seed: u64, count: usize) -> Vec<SeparatedGraph> {
    let mut r = rng(seed);
    let shape = Shape { max_range: 3, max_source: 3, max_edges: 4 };
    (0..count).map(|_| random_graph(&mut r, shape, true)).collect()
}

fn random_graphs(seed: u64, count: usize) -> Vec<SeparatedGraph> {
    let mut r = rng(seed);
    (0..count).map(|_| random_graph(&mut r, Shape::default(), true)).collect()
}

#[test]
fn condition_l_examples() {
    assert!(condition_l(&corpus_graph("e23").unwrap()).holds());

    let g = corpus_graph("two_cycle").unwrap();
    match condition_l(&g) {
        ConditionL::Violated { base, cycle } => {
            assert_eq!(base, vid(&g, "w"));
            assert_eq!(g.render_word(&cycle), "f e~");
            assert!(g.is_admissible(&cycle.mul(&cycle)).unwrap());
        }
        ConditionL::Holds => panic!("the two-edge cycle has no choices"),
    }
    assert!(choice_vertices(&g).iter().all(|&c| !c));

    for name in ["single_edge", "fork", "bare_range"] {
        let g = corpus_graph(name).unwrap();
        assert!(g.vertex_ids().all(|v| simple_cycles_at(&g, v).is_empty()), "{name}");
        assert!(condition_l(&g).holds(), "{name}");
    }
}

#[test]
fn choices_match_path_search() {
    let mut graphs: Vec<SeparatedGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs_small(11, 150));
    for g in &graphs {
        let fast = choice_vertices(g);
        for v in g.vertex_ids() {
            assert_eq!(fast[v.idx()], brute_choice(g, v), "vertex {}", g.vertex_name(v));
        }
    }
}

#[test]
fn simple_cycles_match_path_search() {
    let mut graphs: Vec<SeparatedGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(12, 150));
    for g in &graphs {
        for v in g.vertex_ids() {
            assert_eq!(simple_cycles_at(g, v), brute_simple_cycles(g, v));
        }
        let violated = g.vertex_ids().any(|v| !brute_choice(g, v) && !brute_simple_cycles(g, v).is_empty());
        assert_eq!(condition_l(g).holds(), !violated);
    }
}

#[test]
fn vertex_type_examples() {
    let g = corpus_graph("e23").unwrap();
    let t = vertex_types(&g);
    let (v, groups) = t.violation().expect("two big groups");
    assert_eq!(v, vid(&g, "w"));
    assert_eq!(groups.len(), 2);

    let g = corpus_graph("e12").unwrap();
    let t = vertex_types(&g);
    match t.get(vid(&g, "w")) {
        Some(VertexType::A(x)) => {
            let members: Vec<&str> = g.group(*x).edges.iter().map(|&e| g.edge_name(e)).collect();
            assert_eq!(members, ["a1", "a2"]);
        }
        other => panic!("expected type A, got {other:?}"),
    }

    // Both singleton groups at w have the source v, so w is of type B2.
    let g = corpus_graph("two_cycle").unwrap();
    assert_eq!(vertex_types(&g).get(vid(&g, "w")), Some(&VertexType::B2));

    let g = corpus_graph("fork").unwrap();
    let t = vertex_types(&g);
    assert_eq!(t.get(vid(&g, "u1")), Some(&VertexType::B1));
    assert_eq!(t.get(vid(&g, "u2")), Some(&VertexType::B1));
    assert_eq!(t.types.len(), 2);
}

#[test]
fn one_component_examples() {
    let g = corpus_graph("e23").unwrap();
    assert!(one_components(&g).classes.iter().all(|c| c.len() == 1));

    let g = corpus_graph("e12").unwrap();
    let c = one_components(&g);
    assert!(c.connected(vid(&g, "v"), vid(&g, "w")));
    assert_eq!(c.classes.len(), 1);

    let g = corpus_graph("chain").unwrap();
    let c = one_components(&g);
    assert!(c.connected(vid(&g, "p"), vid(&g, "q")));
    assert!(c.connected(vid(&g, "w"), vid(&g, "q")));
    assert!(!c.connected(vid(&g, "u"), vid(&g, "w")));
}

#[test]
fn one_components_match_union_find() {
    let mut graphs: Vec<SeparatedGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(13, 300));
    let t = tower(&corpus_graph("e12").unwrap(), 3, DEFAULT_MAX_VERTICES).unwrap();
    graphs.extend(t.levels().iter().cloned());
    for g in &graphs {
        let c = one_components(g);
        let ours: Vec<usize> = g.vertex_ids().map(|v| c.class_of(v)).collect();
        assert!(same_partition(&ours, &brute_components(g)));
    }
}

#[test]
fn closed_path_examples() {
    let g = corpus_graph("two_cycle").unwrap();
    for v in ["v", "w"] {
        assert_eq!(closed_path_rank(&g, vid(&g, v)), 1);
        assert_eq!(simple_closed_paths(&g, vid(&g, v)).len(), 1);
    }

    // At v the two loops give two generators; at p the loop of q appears
    // conjugated twice, and the three simple closed paths generate rank 2.
    let g = corpus_graph("two_loops").unwrap();
    let at_v: Vec<String> = simple_closed_paths(&g, vid(&g, "v")).iter().map(|w| g.render_word(w)).collect();
    assert_eq!(at_v.len(), 2);
    assert_eq!(closed_path_rank(&g, vid(&g, "v")), 2);
    assert_eq!(simple_closed_paths(&g, vid(&g, "p")).len(), 3);
    assert_eq!(closed_path_rank(&g, vid(&g, "p")), 2);

    for w in simple_closed_paths(&g, vid(&g, "p")) {
        assert!(g.is_admissible(&w).unwrap());
        assert_eq!(g.letter_source(w.first().unwrap()), vid(&g, "p"));
        assert_eq!(g.letter_range(w.last().unwrap()), vid(&g, "p"));
    }
}

#[test]
fn cycle_class_examples() {
    let g = corpus_graph("two_cycle").unwrap();
    let classes = cycle_classes(&g);
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].vertices, [vid(&g, "w"), vid(&g, "v")].into_iter().collect());

    assert!(cycle_classes(&corpus_graph("e23").unwrap()).is_empty());
    assert!(cycle_classes(&corpus_graph("two_loops").unwrap()).is_empty());
}

#[test]
fn cycle_class_members_share_a_simple_cycle() {
    let mut graphs: Vec<SeparatedGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(14, 200));
    let mut seen = 0;
    for g in &graphs {
        for class in cycle_classes(g) {
            seen += 1;
            let base = *class.vertices.iter().next().unwrap();
            assert!(brute_simple_cycles(g, base).contains(&class.cycle));
            let on_cycle: BTreeSet<VertexId> =
                class.cycle.letters().iter().map(|&l: &Letter| g.letter_range(l)).collect();
            assert!(class.vertices.is_subset(&on_cycle));
            for &v in &class.vertices {
                assert!(!brute_choice(g, v));
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn classify_examples() {
    let g = corpus_graph("e23").unwrap();
    match classify_simplicity(&g, DEFAULT_BOUND, DEFAULT_MAX_VERTICES).unwrap() {
        SimplicityVerdict::NotSimple { level, witness, maximal } => {
            assert_eq!(level, 1);
            let cited: Vec<String> = ["v[a2|b1]", "v[a3|b1]", "v[a1|b2]"].iter().map(|s| s.to_string()).collect();
            let mut cited_sorted = cited.clone();
            cited_sorted.sort();
            assert!(maximal.iter().any(|m| {
                let mut m = m.clone();
                m.sort();
                m == cited_sorted
            }));
            assert!(maximal.contains(&witness));
        }
        other => panic!("unexpected verdict {other:?}"),
    }

    let g = corpus_graph("two_cycle").unwrap();
    match classify_simplicity(&g, DEFAULT_BOUND, DEFAULT_MAX_VERTICES).unwrap() {
        SimplicityVerdict::FreeGroup { rank, generators, .. } => {
            assert_eq!(rank, 1);
            assert_eq!(generators.len(), 1);
        }
        other => panic!("unexpected verdict {other:?}"),
    }

    let g = corpus_graph("two_loops").unwrap();
    match classify_simplicity(&g, DEFAULT_BOUND, DEFAULT_MAX_VERTICES).unwrap() {
        SimplicityVerdict::FreeGroup { rank, .. } => assert_eq!(rank, 2),
        other => panic!("unexpected verdict {other:?}"),
    }
}

#[test]
fn e12_is_a_graph_algebra() {
    let g = corpus_graph("e12").unwrap();
    let SimplicityVerdict::GraphAlgebra { level, graph, inverted } =
        classify_simplicity(&g, DEFAULT_BOUND, DEFAULT_MAX_VERTICES).unwrap()
    else {
        panic!("expected a graph algebra");
    };
    let t = tower(&g, level, DEFAULT_MAX_VERTICES).unwrap();
    let level_graph = t.level(level);
    assert_eq!(graph.edges.len(), level_graph.edge_count());
    assert_eq!(inverted.len(), level_graph.layer_vertices(Layer::One).count());

    // Each layer-1 vertex loses exactly one outgoing edge to an incoming one.
    for w in level_graph.layer_vertices(Layer::One) {
        let name = level_graph.vertex_name(w);
        let idx = graph.vertices.iter().position(|v| v == name).unwrap();
        let incoming = graph.edges.iter().filter(|(_, _, r)| *r == idx).count();
        assert_eq!(incoming, 1);
    }

    // Every proper nonempty vertex set fails heredity or saturation.
    let inc = graph.incidence();
    let n = graph.vertices.len();
    for mask in 1..(1u32 << n) - 1 {
        let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        assert!(!(is_hereditary_in(&inc, &set) && is_saturated_in(&inc, &set)));
    }
}

#[test]
fn verdicts_reverify_on_random_graphs() {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for g in random_graphs(15, 120) {
        let verdict = classify_simplicity(&g, 3, 2_000);
        let Ok(verdict) = verdict else { continue };
        match verdict {
            SimplicityVerdict::NotSimple { level, witness, .. } => {
                *counts.entry("not simple").or_default() += 1;
                let t = tower(&g, level, DEFAULT_MAX_VERTICES).unwrap();
                let lg = t.level(level);
                let set: BTreeSet<VertexId> = witness.iter().map(|n| vid(lg, n)).collect();
                assert!(!set.is_empty() && set.len() < lg.vertex_count());
                assert!(is_hereditary(lg, &set) && is_saturated(lg, &set));
            }
            SimplicityVerdict::GraphAlgebra { level, graph, .. } => {
                *counts.entry("graph algebra").or_default() += 1;
                let t = tower(&g, level, DEFAULT_MAX_VERTICES).unwrap();
                assert_eq!(graph.edges.len(), t.level(level).edge_count());
            }
            SimplicityVerdict::FreeGroup { level, base, .. } => {
                *counts.entry("free group").or_default() += 1;
                let t = tower(&g, level, DEFAULT_MAX_VERTICES).unwrap();
                let lg = t.level(level);
                assert!(!brute_choice(lg, vid(lg, &base)));
            }
            SimplicityVerdict::Inconclusive { .. } => *counts.entry("inconclusive").or_default() += 1,
        }
    }
    assert!(counts.get("not simple").copied().unwrap_or(0) > 0);
}

proptest! {
    #[test]
    fn one_connectedness_is_an_equivalence(seed in 0u64..10_000) {
        let g = random_graphs(seed, 1).pop().unwrap();
        let c = one_components(&g);
        let single = |l: Letter| g.group(g.group_of(sepgraph_core::EdgeId(l.index))).edges.len() == 1;
        let reach = |v: VertexId| -> BTreeSet<VertexId> {
            let mut out: BTreeSet<VertexId> = [v].into_iter().collect();
            let mut frontier: Vec<Word> = g.letters_from(v).into_iter().filter(|&l| single(l)).map(Word::single).collect();
            while let Some(w) = frontier.pop() {
                let last = w.last().unwrap();
                out.insert(g.letter_range(last));
                if w.len() < g.vertex_count() {
                    frontier.extend(g.successors(last).into_iter().filter(|&l| single(l)).map(|l| w.then(l)));
                }
            }
            out
        };
        for v in g.vertex_ids() {
            let r = reach(v);
            prop_assert!(r.contains(&v));
            for &u in &r {
                prop_assert!(reach(u).contains(&v));
                prop_assert!(c.connected(u, v));
            }
        }
    }
}
