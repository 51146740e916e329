use std::collections::{BTreeSet, HashSet};

use sepgraph_core::{Letter, Word};

use crate::ball::{signed_letters, Ball};
use crate::error::SubshiftError;

/// All reduced words of length `1..=radius` over `size` letters, in canonical order.
fn reduced_words(size: usize, radius: usize) -> Vec<Word> {
    let letters = signed_letters(size);
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(l.inv()) {
                    next.push(w.then(l));
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every `radius`-ball of the full convex shift over `size` letters.
pub fn full_balls(size: usize, radius: usize, budget: usize) -> Result<Vec<Ball>, SubshiftError> {
    let nodes = reduced_words(size, radius);
    let mut sets: Vec<BTreeSet<Word>> = vec![BTreeSet::from([Word::empty()])];
    for node in &nodes {
        let parent = node.parent();
        let mut extra = Vec::new();
        for s in &sets {
            if s.contains(&parent) {
                let mut with = s.clone();
                with.insert(node.clone());
                extra.push(with);
            }
        }
        if sets.len() + extra.len() > budget {
            return Err(SubshiftError::SizeLimitExceeded { budget });
        }
        sets.extend(extra);
    }
    let mut balls: Vec<Ball> = sets.into_iter().map(|s| Ball::from_set(radius, s, None)).collect();
    balls.sort();
    Ok(balls)
}

/// Whether no member `alpha` with `|alpha| + r(F) <= radius` sees a
/// forbidden ball `F` as `(alpha.B)^{r(F)}`.
pub fn avoids_forbidden(ball: &Ball, forbidden: &[Ball]) -> bool {
    forbidden.iter().all(|f| {
        ball.words().iter().all(|alpha| match ball.shifted(alpha, f.radius()) {
            Some(seen) => seen.words() != f.words(),
            None => true,
        })
    })
}

/// Members of `c` that an extension through `s^-1` may not see: words of
/// maximal length whose first letter is not `s^-1`.
fn strip(c: &Ball, s: Letter) -> BTreeSet<Word> {
    let r = c.radius();
    c.words().iter().filter(|w| w.len() < r || w.first() == Some(s.inv())).cloned().collect()
}

/// The greatest subset in which every ball is the centre of a ball of radius
/// one more whose neighbouring sub-balls all lie in the subset.
pub fn stable_core(balls: &[Ball]) -> Vec<Ball> {
    let mut current: Vec<Ball> = balls.iter().map(Ball::untagged).collect();
    current.sort();
    current.dedup();
    loop {
        let mut index: HashSet<(Letter, BTreeSet<Word>)> = HashSet::new();
        for c in &current {
            for t in c.letters() {
                index.insert((t.inv(), strip(c, t.inv())));
            }
        }
        let before = current.len();
        current.retain(|c| {
            c.letters().into_iter().all(|s| index.contains(&(s, shift_full(c, s))))
        });
        if current.len() == before {
            return current;
        }
    }
}

/// `(s.C)^R` for a letter `s` of `C`, computed from the members of `C`.
fn shift_full(c: &Ball, s: Letter) -> BTreeSet<Word> {
    let back = Word::single(s.inv());
    c.words().iter().map(|w| w.mul(&back)).filter(|w| w.len() <= c.radius()).collect()
}

/// Whether every ball of the set survives its own pruning.
pub fn is_pruning_stable(balls: &[Ball]) -> bool {
    let mut distinct: Vec<Ball> = balls.iter().map(Ball::untagged).collect();
    distinct.sort();
    distinct.dedup();
    stable_core(&distinct).len() == distinct.len()
}

/// `B_R(Omega^F)`: the `R`-balls over `size` letters that avoid every
/// forbidden ball and survive iterated one-step extension.
pub fn prune_allowed_balls(
    size: usize,
    radius: usize,
    forbidden: &[Ball],
    budget: usize,
) -> Result<Vec<Ball>, SubshiftError> {
    if let Some(f) = forbidden.iter().find(|f| f.radius() > radius) {
        return Err(SubshiftError::ForbiddenTooLarge { radius: f.radius(), step: radius });
    }
    let candidates: Vec<Ball> =
        full_balls(size, radius, budget)?.into_iter().filter(|b| avoids_forbidden(b, forbidden)).collect();
    Ok(stable_core(&candidates))
}
