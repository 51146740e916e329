use sepgraph_bratteli::{BratteliError, BratteliTower};
use sepgraph_core::SeparatedGraph;

use crate::closure::{closure_in, is_hereditary, is_saturated};
use crate::error::HereditaryError;
use crate::lift::{lift_in_tower, quotient_graph};
use crate::vertex_set::VertexSet;

/// Level-by-level data of a hereditary saturated set of the Bratteli diagram.
#[derive(Debug, Clone)]
pub struct IdealReport {
    /// `H^(k) = H ∩ E_k^0` for every level of the tower.
    pub levels: Vec<VertexSet>,
    pub bound: usize,
    /// Smallest `n <= bound` with `H = H^n` on all inspected levels.
    pub finite_type: Option<usize>,
    /// `generated[n][m]` is `H^n ∩ E_m^0`: `H^(m)` below level `n` and the
    /// lifts of `H^(n)` from level `n` on.
    pub generated: Vec<Vec<VertexSet>>,
    /// `(E_k / H^(k), C^k / H^(k))` per level.
    pub quotients: Vec<SeparatedGraph>,
}

/// Spreads a set given at level `k` over all levels of the tower: lifts it
/// upwards and closes it inside the union `F_m` to recover the lower levels.
pub fn spread_from_level(t: &BratteliTower, h: &VertexSet) -> Result<Vec<VertexSet>, HereditaryError> {
    let top = t.height();
    if h.level > top {
        return Err(BratteliError::LevelOutOfRange { level: h.level, height: top }.into());
    }
    let mut lifted = vec![h.clone()];
    while lifted.last().unwrap().level < top {
        let next = lift_in_tower(t, lifted.last().unwrap())?;
        lifted.push(next);
    }
    let inc = t.union_incidence(top);
    let mut seed = vec![false; inc.vertex_count];
    for set in &lifted {
        for &v in &set.vertices {
            seed[t.global_index(top, set.level, v)] = true;
        }
    }
    let closed = closure_in(&inc, &seed);
    Ok((0..=top)
        .map(|k| {
            let g = t.level(k);
            let vertices = g.vertex_ids().filter(|&v| closed[t.global_index(top, k, v)]).collect();
            VertexSet::new(k, vertices)
        })
        .collect())
}

fn lift_to(t: &BratteliTower, h: &VertexSet, level: usize) -> Result<VertexSet, HereditaryError> {
    let mut cur = h.clone();
    while cur.level < level {
        cur = lift_in_tower(t, &cur)?;
    }
    Ok(cur)
}

/// Bookkeeping of `H^(n)` and `H^n` for a set presented on every tower level.
///
/// Each level must be hereditary and saturated, and consecutive levels must
/// agree on shared vertices and contain the lifts of the levels below.
pub fn tower_ideal(t: &BratteliTower, levels: &[VertexSet], bound: usize) -> Result<IdealReport, HereditaryError> {
    let top = t.height().min(levels.len().saturating_sub(1));
    let levels: Vec<VertexSet> = levels[..=top].to_vec();
    for (k, h) in levels.iter().enumerate() {
        let g = t.level(k);
        if !is_hereditary(g, &h.vertices) {
            return Err(HereditaryError::InputNotHereditary { level: k });
        }
        if !is_saturated(g, &h.vertices) {
            return Err(HereditaryError::InputNotSaturated { level: k });
        }
    }
    for k in 0..top {
        let lifted = lift_in_tower(t, &levels[k])?;
        if !lifted.vertices.is_subset(&levels[k + 1].vertices) {
            return Err(HereditaryError::InconsistentLevels { level: k });
        }
        let upper = t.level(k + 1);
        let shared_ok = upper
            .vertex_ids()
            .filter(|&v| upper.layer(v) == sepgraph_core::Layer::Zero)
            .all(|v| levels[k + 1].contains(v) == lifted.contains(v));
        if !shared_ok {
            return Err(HereditaryError::InconsistentLevels { level: k });
        }
    }
    let bound = bound.min(top);
    let mut generated = Vec::with_capacity(bound + 1);
    let mut finite_type = None;
    for n in 0..=bound {
        let mut per_level: Vec<VertexSet> = levels[..n].to_vec();
        for m in n..=top {
            per_level.push(lift_to(t, &levels[n], m)?);
        }
        if finite_type.is_none() && (n..=top).all(|m| per_level[m] == levels[m]) {
            finite_type = Some(n);
        }
        generated.push(per_level);
    }
    let quotients = levels.iter().map(|h| quotient_graph(t.level(h.level), h)).collect::<Result<_, _>>()?;
    Ok(IdealReport { levels, bound, finite_type, generated, quotients })
}
