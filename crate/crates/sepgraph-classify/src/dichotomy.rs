use std::collections::{BTreeSet, HashMap};

use sepgraph_bratteli::{tower, BratteliTower};
use sepgraph_core::{DiGraph, Layer, SeparatedGraph, VertexId};
use sepgraph_hereditary::{closure_in, enumerate_hsets};

use crate::choice::choice_vertices;
use crate::components::{one_components, OneComponents};
use crate::cycles::{closed_path_rank, simple_closed_paths};
use crate::error::ClassifyError;
use crate::types::{vertex_types, VertexType, VertexTypeMap};

/// Default number of levels searched.
pub const DEFAULT_BOUND: usize = 6;

/// Largest lattice enumerated to list the maximal proper closed sets.
const WITNESS_LATTICE_CAP: usize = 1 << 12;

/// Largest level, in vertices, whose lattice is enumerated for a witness.
const WITNESS_LATTICE_VERTICES: usize = 64;

/// Result of the simplicity classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityVerdict {
    /// A nontrivial hereditary saturated set exists at `level`.
    NotSimple {
        level: usize,
        /// Vertex names of the witness (a maximal proper set when the lattice is small enough).
        witness: Vec<String>,
        /// All maximal proper closed sets at `level`, empty if the lattice was too large.
        maximal: Vec<Vec<String>>,
    },
    /// Every layer-0 vertex of `level` is of type A; the algebra is that of
    /// the non-separated graph obtained by inverting one singleton edge per source.
    GraphAlgebra {
        level: usize,
        graph: DiGraph,
        /// Names of the inverted edges, one per layer-1 vertex.
        inverted: Vec<String>,
    },
    /// A type B vertex of `level`, not 1-connected to type A, whose group of
    /// closed paths is free of rank `rank`.
    FreeGroup {
        level: usize,
        rank: usize,
        base: String,
        /// Simple closed paths at `base`, one per inversion pair.
        generators: Vec<String>,
    },
    /// No decision within `bound` levels.
    Inconclusive { bound: usize, reason: String },
}

enum Step {
    Done(SimplicityVerdict),
    Advance(String),
}

/// Searches `levels 0..=bound` for a nontrivial hereditary saturated set and,
/// from level 1 on, runs the dichotomy analysis on each level until one of
/// them decides.
pub fn classify_simplicity(g: &SeparatedGraph, bound: usize, budget: usize) -> Result<SimplicityVerdict, ClassifyError> {
    let mut t = tower(g, 0, budget)?;
    let mut reason = String::from("no level was analysed");
    for k in 0..=bound {
        if k > t.height() {
            t.extend(budget)?;
        }
        if let Some(verdict) = nontrivial_witness(&t, k)? {
            return Ok(verdict);
        }
        if k == 0 {
            continue;
        }
        match analyse_level(t.level(k), k) {
            Step::Done(verdict) => return Ok(verdict),
            Step::Advance(why) => reason = why,
        }
    }
    Ok(SimplicityVerdict::Inconclusive { bound, reason })
}

/// A `NotSimple` verdict when level `k` has a nontrivial closed set.
fn nontrivial_witness(t: &BratteliTower, k: usize) -> Result<Option<SimplicityVerdict>, ClassifyError> {
    let g = t.level(k);
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut smallest: Option<Vec<bool>> = None;
    for v in 0..n {
        let mut seed = vec![false; n];
        seed[v] = true;
        let closed = closure_in(&inc, &seed);
        let size = closed.iter().filter(|&&b| b).count();
        if size < n && smallest.as_ref().is_none_or(|s| size < s.iter().filter(|&&b| b).count()) {
            smallest = Some(closed);
        }
    }
    let Some(smallest) = smallest else { return Ok(None) };
    let names = |set: &BTreeSet<VertexId>| set.iter().map(|&v| g.vertex_name(v).to_string()).collect::<Vec<_>>();
    let lattice = if n <= WITNESS_LATTICE_VERTICES { enumerate_hsets(g, WITNESS_LATTICE_CAP).ok() } else { None };
    let verdict = match lattice {
        Some(lattice) => {
            let maximal: Vec<Vec<String>> = lattice.maximal_proper().into_iter().map(|i| names(&lattice.sets[i])).collect();
            SimplicityVerdict::NotSimple { level: k, witness: maximal[0].clone(), maximal }
        }
        None => {
            let set: BTreeSet<VertexId> = (0..n).filter(|&v| smallest[v]).map(|v| VertexId(v as u32)).collect();
            SimplicityVerdict::NotSimple { level: k, witness: names(&set), maximal: Vec::new() }
        }
    };
    Ok(Some(verdict))
}

/// Whether the 1-component `class` carries a reduced closed 1-path, that is,
/// whether its singleton-group edges contain an undirected cycle.
fn component_has_cycle(g: &SeparatedGraph, class: &BTreeSet<VertexId>) -> bool {
    let edges = g
        .edge_ids()
        .filter(|&e| g.group(g.group_of(e)).edges.len() == 1 && class.contains(&g.source(e)))
        .count();
    edges + 1 > class.len()
}

/// Singleton groups with source `w`, attached at type A vertices.
fn type_a_singletons(g: &SeparatedGraph, types: &VertexTypeMap) -> HashMap<VertexId, Vec<sepgraph_core::EdgeId>> {
    let mut out: HashMap<VertexId, Vec<sepgraph_core::EdgeId>> = HashMap::new();
    for x in g.groups() {
        if x.edges.len() == 1 && types.is_type_a(x.range) {
            out.entry(g.source(x.edges[0])).or_default().push(x.edges[0]);
        }
    }
    out
}

fn analyse_level(g: &SeparatedGraph, level: usize) -> Step {
    let types = vertex_types(g);
    if let Some((v, _)) = types.violation() {
        return Step::Advance(format!("level {level}: `{}` has two groups of size > 1", g.vertex_name(v)));
    }
    let singletons = type_a_singletons(g, &types);
    if let Some((w, _)) = singletons.iter().find(|(_, es)| es.len() > 1) {
        return Step::Advance(format!(
            "level {level}: `{}` is the source of two singleton groups at type A vertices",
            g.vertex_name(*w)
        ));
    }
    let components = one_components(g);
    if let Some(why) = check_one_connectivity(g, level, &types, &components) {
        return Step::Advance(why);
    }
    let layer0: Vec<VertexId> = g.layer_vertices(Layer::Zero).collect();
    if layer0.iter().all(|&v| types.is_type_a(v)) {
        return graph_algebra(g, level, &singletons);
    }
    let free_base = layer0.iter().copied().find(|&v| {
        types.is_type_b(v) && !components.classes[components.class_of(v)].iter().any(|&u| types.is_type_a(u))
    });
    match free_base {
        Some(v) => free_group(g, level, v),
        None => Step::Advance(format!("level {level}: every type B vertex is 1-connected to a type A vertex")),
    }
}

/// Necessary conditions on 1-connectivity between type A and type B vertices.
fn check_one_connectivity(
    g: &SeparatedGraph,
    level: usize,
    types: &VertexTypeMap,
    components: &OneComponents,
) -> Option<String> {
    for class in &components.classes {
        let a: Vec<VertexId> = class.iter().copied().filter(|&v| types.is_type_a(v)).collect();
        let b: Vec<VertexId> = class.iter().copied().filter(|&v| types.is_type_b(v)).collect();
        if a.len() > 1 {
            return Some(format!(
                "level {level}: type A vertices `{}` and `{}` are 1-connected",
                g.vertex_name(a[0]),
                g.vertex_name(a[1])
            ));
        }
        if a.is_empty() || b.is_empty() {
            continue;
        }
        if let Some(&w) = b.iter().find(|&&w| types.get(w) == Some(&VertexType::B2)) {
            return Some(format!(
                "level {level}: type A vertex `{}` is 1-connected to type B2 vertex `{}`",
                g.vertex_name(a[0]),
                g.vertex_name(w)
            ));
        }
        if component_has_cycle(g, class) {
            return Some(format!(
                "level {level}: the 1-component of type A vertex `{}` contains type B vertices and a 1-cycle",
                g.vertex_name(a[0])
            ));
        }
    }
    None
}

fn graph_algebra(
    g: &SeparatedGraph,
    level: usize,
    singletons: &HashMap<VertexId, Vec<sepgraph_core::EdgeId>>,
) -> Step {
    let mut inverted = BTreeSet::new();
    for w in g.layer_vertices(Layer::One) {
        match singletons.get(&w).map(Vec::as_slice) {
            Some(&[y]) => {
                inverted.insert(y);
            }
            _ => {
                return Step::Advance(format!(
                    "level {level}: `{}` is not the source of exactly one singleton group",
                    g.vertex_name(w)
                ))
            }
        }
    }
    let graph = DiGraph {
        vertices: g.vertices().iter().map(|v| v.name.clone()).collect(),
        edges: g
            .edge_ids()
            .map(|e| {
                let (s, r) = (g.source(e).idx(), g.range(e).idx());
                let name = g.edge_name(e).to_string();
                if inverted.contains(&e) {
                    (name, r, s)
                } else {
                    (name, s, r)
                }
            })
            .collect(),
    };
    let inc = graph.incidence();
    let n = graph.vertices.len();
    let trivial = (0..n).all(|v| {
        let mut seed = vec![false; n];
        seed[v] = true;
        closure_in(&inc, &seed).iter().all(|&b| b)
    });
    if !trivial {
        return Step::Advance(format!("level {level}: the inverted graph has a nontrivial hereditary saturated set"));
    }
    let inverted = inverted.into_iter().map(|e| g.edge_name(e).to_string()).collect();
    Step::Done(SimplicityVerdict::GraphAlgebra { level, graph, inverted })
}

fn free_group(g: &SeparatedGraph, level: usize, v: VertexId) -> Step {
    if choice_vertices(g)[v.idx()] {
        return Step::Advance(format!("level {level}: type B vertex `{}` admits a choice", g.vertex_name(v)));
    }
    let generators = simple_closed_paths(g, v).iter().map(|p| g.render_word(p)).collect();
    Step::Done(SimplicityVerdict::FreeGroup {
        level,
        rank: closed_path_rank(g, v),
        base: g.vertex_name(v).to_string(),
        generators,
    })
}
