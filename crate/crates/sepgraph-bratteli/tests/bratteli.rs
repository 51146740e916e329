use num_bigint::BigInt;
use proptest::prelude::*;
use sepgraph_bratteli::{
    grothendieck, has_distinct_sources, invariant_factors, monoid_presentation, one_graph, one_graph_with_budget,
    tower, BratteliError, MonoidPresentation, DEFAULT_MAX_VERTICES,
};
use sepgraph_core::{corpus, corpus_graph, load, save, GraphBuilder, Layer, SeparatedGraph};
use sepgraph_testkit::rand::Rng;
use sepgraph_testkit::{random_graph, rng, Shape};

fn group_sizes(g: &SeparatedGraph) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.groups().iter().map(|x| x.edges.len()).collect();
    sizes.sort();
    sizes
}

#[test]
fn e23_level_one_counts() {
    let g1 = one_graph(&corpus_graph("e23").unwrap()).graph;
    assert_eq!(g1.layer_vertices(Layer::Zero).count(), 1);
    assert_eq!(g1.layer_vertices(Layer::One).count(), 6);
    assert_eq!(g1.edge_count(), 12);
    assert_eq!(group_sizes(&g1), vec![2, 2, 2, 3, 3]);
    assert!(g1.vertex_by_name("v[a1|b1]").is_some());
    assert!(g1.edge_by_name("a[a1][_|b1]").is_some());
}

#[test]
fn single_edge_level_one() {
    let g1 = one_graph(&corpus_graph("single_edge").unwrap()).graph;
    let names: Vec<&str> = g1.vertices().iter().map(|v| v.name.as_str()).collect();
    assert_eq!(names, vec!["v", "v[e]"]);
    assert_eq!(g1.edge_count(), 1);
    assert_eq!(group_sizes(&g1), vec![1]);
}

#[test]
fn lamplighter_level_one_file() {
    let g1 = one_graph(&corpus_graph("lamplighter").unwrap()).graph;
    assert_eq!(g1.layer_vertices(Layer::Zero).count(), 2);
    assert_eq!(g1.layer_vertices(Layer::One).count(), 4);
    let text = save(&g1);
    assert_eq!(text.lines().filter(|l| l.starts_with("vertex ")).count(), 6);
    assert_eq!(text.lines().filter(|l| l.starts_with("edge ")).count(), 8);
    assert_eq!(load(&text).unwrap(), g1);
}

#[test]
fn lamplighter_tower_sizes() {
    let t = tower(&corpus_graph("lamplighter").unwrap(), 3, DEFAULT_MAX_VERTICES).unwrap();
    let zeros: Vec<usize> = t.layer_sizes().iter().map(|s| s.0).collect();
    assert_eq!(zeros, vec![1, 2, 4, 8]);
    let g = corpus_graph("e22").unwrap();
    let t0 = tower(&g, 0, DEFAULT_MAX_VERTICES).unwrap();
    assert_eq!(t0.height(), 0);
    assert_eq!(t0.level(0), &g);
}

#[test]
fn budget_is_enforced() {
    let g = corpus_graph("e23").unwrap();
    match tower(&g, 3, 1000) {
        Err(BratteliError::SizeLimitExceeded { level, .. }) => assert_eq!(level, 3),
        other => panic!("unexpected {:?}", other.map(|t| t.height())),
    }
    assert!(one_graph_with_budget(&g, 3).is_err());
}

#[test]
fn closed_form_sizes_match_enumeration() {
    let mut r = rng(3);
    for _ in 0..200 {
        let g = random_graph(&mut r, Shape { max_range: 3, max_source: 3, max_edges: 7 }, false);
        let mut sources = 0usize;
        let mut edges = 0usize;
        for u in g.layer_vertices(Layer::Zero) {
            let sizes: Vec<usize> = g.groups_at(u).iter().map(|&x| g.group(x).edges.len()).collect();
            let prod: usize = sizes.iter().product();
            sources += prod;
            edges += sizes.len() * prod;
        }
        let g1 = one_graph(&g).graph;
        assert_eq!(g1.layer_vertices(Layer::One).count(), sources);
        assert_eq!(g1.edge_count(), edges);
        assert_eq!(g1.layer_vertices(Layer::Zero).count(), g.layer_vertices(Layer::One).count());
        assert!(has_distinct_sources(&g1));
    }
}

#[test]
fn distinct_sources_on_corpus_levels() {
    for (name, g) in corpus() {
        let t = tower(&g, 3, 20_000).or_else(|_| tower(&g, 2, 20_000)).unwrap();
        for k in 1..=t.height() {
            assert!(has_distinct_sources(t.level(k)), "{name} level {k}");
        }
    }
}

#[test]
fn naming_maps_are_consistent() {
    let g = corpus_graph("ex_unique_pair").unwrap();
    let t = tower(&g, 2, DEFAULT_MAX_VERTICES).unwrap();
    for k in 1..=2 {
        let (lower, upper, naming) = (t.level(k - 1), t.level(k), t.naming(k));
        for e in upper.edge_ids() {
            let (x, slot) = naming.edge_parent[e.idx()];
            let (u, tuple) = naming.tuples[upper.source(e).idx()].clone().unwrap();
            assert_eq!(tuple[slot], x);
            assert_eq!(lower.range(x), u);
            assert_eq!(upper.vertex_name(upper.range(e)), lower.vertex_name(lower.source(x)));
        }
    }
}

#[test]
fn monoid_presentations() {
    let g = corpus_graph("e23").unwrap();
    let t = tower(&g, 0, DEFAULT_MAX_VERTICES).unwrap();
    let p = monoid_presentation(&t, 0).unwrap();
    assert_eq!(p.generators, vec!["w@0", "v@0"]);
    assert_eq!(p.relation_matrix(), vec![vec![1, -3], vec![1, -2]]);
    let g = grothendieck(&p);
    assert_eq!((g.free_rank, g.torsion.len()), (0, 0));

    let single = load("vertex p layer=0\n").unwrap();
    let p = MonoidPresentation::of_graph(&single);
    assert_eq!((p.generators.len(), p.relations.len()), (1, 0));
    assert_eq!(grothendieck(&p).free_rank, 1);

    let lamp = tower(&corpus_graph("lamplighter").unwrap(), 1, DEFAULT_MAX_VERTICES).unwrap();
    let p = monoid_presentation(&lamp, 1).unwrap();
    assert_eq!(p.generators.len(), 7);
    let group_count: usize = (0..=1).map(|k| lamp.level(k).group_count()).sum();
    assert_eq!(p.relations.len(), group_count);
    assert_eq!(p.relations.len(), 6);
}

fn trivially_separated(g: &SeparatedGraph) -> SeparatedGraph {
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.vertex(&v.name, v.layer);
    }
    for e in g.edges() {
        b.edge(&e.name, g.vertex_name(e.source), g.vertex_name(e.range));
    }
    for u in g.layer_vertices(Layer::Zero) {
        let names: Vec<&str> = g.in_edges(u).iter().map(|&e| g.edge_name(e)).collect();
        if !names.is_empty() {
            b.group(g.vertex_name(u), "C", &names);
        }
    }
    b.build().unwrap()
}

#[test]
fn trivially_separated_groups_are_level_stable() {
    let mut r = rng(17);
    let mut checked = 0;
    while checked < 30 {
        let g = trivially_separated(&random_graph(&mut r, Shape { max_range: 3, max_source: 3, max_edges: 6 }, true));
        if g.layer_vertices(Layer::Zero).any(|u| g.in_edges(u).is_empty()) {
            continue;
        }
        let t = tower(&g, 2, DEFAULT_MAX_VERTICES).unwrap();
        let groups: Vec<_> = (0..=2).map(|n| grothendieck(&monoid_presentation(&t, n).unwrap())).collect();
        assert_eq!(groups[0], groups[1]);
        assert_eq!(groups[1], groups[2]);
        checked += 1;
    }
}

/// Determinant by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as ratios of determinantal divisors (gcds of k-minors).
fn oracle_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut d = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
                d = gcd(d, det(minor));
            }
        }
        if d == 0 {
            break;
        }
        out.push(BigInt::from(d / prev));
        prev = d;
    }
    out
}

#[test]
fn snf_matches_determinantal_divisors() {
    let mut r = rng(99);
    for _ in 0..100 {
        let rows = r.gen_range(1..=8);
        let cols = r.gen_range(1..=8);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| r.gen_range(-4..=4)).collect()).collect();
        assert_eq!(invariant_factors(&m), oracle_factors(&m), "{m:?}");
    }
}

proptest! {
    #[test]
    fn snf_invariant_under_row_operations(
        m in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 4), 1..5),
        i in 0usize..4, j in 0usize..4, c in -3i64..=3,
    ) {
        let before = invariant_factors(&m);
        let mut shuffled = m.clone();
        shuffled.reverse();
        prop_assert_eq!(&invariant_factors(&shuffled), &before);
        let (i, j) = (i % m.len(), j % m.len());
        if i != j {
            let mut ops = m.clone();
            for col in 0..4 {
                ops[i][col] += c * m[j][col];
            }
            prop_assert_eq!(&invariant_factors(&ops), &before);
        }
    }
}
