use num_bigint::BigInt;
use num_traits::One;
use sepgraph_core::{Incidence, SeparatedGraph};

use crate::error::BratteliError;
use crate::snf::smith_normal_form;
use crate::tower::{BratteliTower, GlobalVertex};

/// One monoid relation `a_lhs = sum of multiplicity * a_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: usize,
    pub rhs: Vec<(usize, u32)>,
}

/// Presentation of a graph monoid: one generator per vertex and one relation
/// per group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidPresentation {
    /// Generator labels (vertex names, with the level when taken from a tower).
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl MonoidPresentation {
    /// Presentation read off incidence data; `labels` names the vertices.
    pub fn from_incidence(inc: &Incidence, labels: Vec<String>) -> Self {
        let relations = inc
            .groups
            .iter()
            .map(|(v, members)| {
                let mut rhs: Vec<(usize, u32)> = Vec::new();
                let mut sources: Vec<usize> = members.iter().map(|&e| inc.edges[e].0).collect();
                sources.sort();
                for s in sources {
                    match rhs.last_mut() {
                        Some((g, m)) if *g == s => *m += 1,
                        _ => rhs.push((s, 1)),
                    }
                }
                Relation { lhs: *v, rhs }
            })
            .collect();
        MonoidPresentation { generators: labels, relations }
    }

    /// Presentation of `M(E, C)` for a single graph.
    pub fn of_graph(g: &SeparatedGraph) -> Self {
        let labels = g.vertices().iter().map(|v| v.name.clone()).collect();
        Self::from_incidence(&g.incidence(), labels)
    }

    /// Relation matrix: one row per relation, `+1` at the left-hand side and
    /// minus the multiplicities on the right.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relations
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                row[r.lhs] += 1;
                for &(g, m) in &r.rhs {
                    row[g] -= m as i64;
                }
                row
            })
            .collect()
    }
}

/// Presentation of `M(F_n, D^n)` with generators labelled `name@level`.
pub fn monoid_presentation(t: &BratteliTower, n: usize) -> Result<MonoidPresentation, BratteliError> {
    t.checked_level(n)?;
    let labels = t
        .union_vertices(n)
        .into_iter()
        .map(|GlobalVertex { level, vertex }| format!("{}@{}", t.level(level).vertex_name(vertex), level))
        .collect();
    Ok(MonoidPresentation::from_incidence(&t.union_incidence(n), labels))
}

/// A finitely generated abelian group `Z^free_rank + sum Z/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothendieckGroup {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

/// Grothendieck group of the presented monoid: the cokernel of the transposed
/// relation matrix, read off its Smith normal form.
pub fn grothendieck(p: &MonoidPresentation) -> GrothendieckGroup {
    let matrix: Vec<Vec<BigInt>> =
        p.relation_matrix().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let diag = smith_normal_form(matrix);
    GrothendieckGroup {
        free_rank: p.generators.len() - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}
