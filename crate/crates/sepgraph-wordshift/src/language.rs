use std::collections::BTreeSet;

use crate::error::WordShiftError;
use crate::word::BinaryWord;

/// Longest forbidden word accepted by [`Language`].
pub const MAX_FORBIDDEN_LENGTH: usize = 16;

/// The language of the two-sided subshift `X_F` of a finite forbidden set.
///
/// States are the `F`-free words of length `K = max |f| - 1`; the state `s`
/// moves to `(sc)` without its first letter on reading `c` when `sc` is
/// `F`-free. Only states on bi-infinite paths are kept, so a word belongs to
/// the language exactly when some path of kept states reads it.
#[derive(Debug, Clone)]
pub struct Language {
    order: usize,
    /// `next[s][c]` for kept states, `None` when the step leaves the kept part.
    next: Vec<[Option<usize>; 2]>,
    alive: Vec<bool>,
}

fn free_of(word: &[u8], forbidden: &BTreeSet<BinaryWord>) -> bool {
    forbidden.iter().all(|f| !f.is_empty() && !word.windows(f.len()).any(|w| w == f.bytes()))
}

fn state_word(state: usize, order: usize) -> Vec<u8> {
    (0..order).map(|i| if state >> (order - 1 - i) & 1 == 1 { b'1' } else { b'0' }).collect()
}

impl Language {
    pub fn new(forbidden: &BTreeSet<BinaryWord>) -> Result<Self, WordShiftError> {
        let longest = forbidden.iter().map(BinaryWord::len).max().unwrap_or(0);
        if longest > MAX_FORBIDDEN_LENGTH {
            return Err(WordShiftError::ForbiddenTooLong { length: longest, limit: MAX_FORBIDDEN_LENGTH });
        }
        let order = longest.saturating_sub(1);
        let count = 1usize << order;
        let mask = count - 1;
        let mut alive: Vec<bool> = (0..count).map(|s| free_of(&state_word(s, order), forbidden)).collect();
        let mut next = vec![[None; 2]; count];
        for (s, slot) in next.iter_mut().enumerate() {
            if !alive[s] {
                continue;
            }
            let mut word = state_word(s, order);
            for (c, target) in slot.iter_mut().enumerate() {
                word.push(b'0' + c as u8);
                if free_of(&word, forbidden) {
                    *target = Some(((s << 1) | c) & mask);
                }
                word.pop();
            }
        }
        loop {
            let mut has_in = vec![false; count];
            for s in (0..count).filter(|&s| alive[s]) {
                for t in next[s].iter().flatten() {
                    if alive[*t] {
                        has_in[*t] = true;
                    }
                }
            }
            let mut changed = false;
            for s in 0..count {
                let has_out = next[s].iter().flatten().any(|&t| alive[t]);
                if alive[s] && !(has_in[s] && has_out) {
                    alive[s] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for slot in next.iter_mut() {
            for t in slot.iter_mut() {
                if t.is_some_and(|t| !alive[t]) {
                    *t = None;
                }
            }
        }
        Ok(Language { order, next, alive })
    }

    /// The window length `K` of the automaton.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether `X_F` is empty.
    pub fn is_empty(&self) -> bool {
        !self.alive.iter().any(|&a| a)
    }

    /// Whether `w` occurs in some point of `X_F`.
    pub fn contains(&self, w: &BinaryWord) -> bool {
        let mut current: Vec<bool> = self.alive.clone();
        for &b in w.bytes() {
            let c = (b - b'0') as usize;
            let mut step = vec![false; current.len()];
            let mut any = false;
            for (s, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                if let Some(t) = self.next[s][c] {
                    step[t] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            current = step;
        }
        current.iter().any(|&on| on)
    }
}
