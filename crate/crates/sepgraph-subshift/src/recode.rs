use std::collections::{BTreeSet, HashMap};

use sepgraph_core::{Letter, Word};

use crate::ball::{Alphabet, Ball};
use crate::error::SubshiftError;

/// The formal symbol `[B <a B']`: the transition from the `n`-ball `B'` to
/// the `n`-ball `B` along the letter `a`. Balls are indices into
/// [`RecodedAlphabet::balls`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub target: usize,
    pub letter: u32,
    pub source: usize,
}

/// The alphabet `A^[n:Omega]` of an `R`-step subshift, built from its
/// allowed `R`-balls with `n < R`.
#[derive(Debug, Clone)]
pub struct RecodedAlphabet {
    n: usize,
    balls: Vec<Ball>,
    symbols: Vec<Symbol>,
    names: Vec<String>,
    ball_index: HashMap<Ball, usize>,
    symbol_index: HashMap<Symbol, u32>,
}

impl RecodedAlphabet {
    /// Collects `[(a.C)^n <a C^n]` over allowed balls `C` and letters `a` in `C`.
    pub fn new(letters: &Alphabet, allowed: &[Ball], n: usize) -> Result<Self, SubshiftError> {
        if let Some(c) = allowed.iter().find(|c| c.radius() <= n) {
            return Err(SubshiftError::RadiusTooSmall { radius: c.radius(), n });
        }
        let mut balls: Vec<Ball> = allowed.iter().map(|c| c.restrict(n).untagged()).collect();
        balls.sort();
        balls.dedup();
        let ball_index: HashMap<Ball, usize> = balls.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let mut symbols = BTreeSet::new();
        for c in allowed {
            let source = ball_index[&c.restrict(n).untagged()];
            for l in c.letters().into_iter().filter(|l| !l.inverse) {
                let moved = c.shifted(&Word::single(l), n).expect("letter of the ball");
                let target = *ball_index.get(&moved).ok_or_else(|| {
                    SubshiftError::InvalidBall("a neighbouring ball is not allowed".to_string())
                })?;
                symbols.insert(Symbol { target, letter: l.index, source });
            }
        }
        Ok(Self::from_parts(letters, n, balls, symbols.into_iter().collect()))
    }

    pub(crate) fn from_parts(letters: &Alphabet, n: usize, balls: Vec<Ball>, symbols: Vec<Symbol>) -> Self {
        let ball_index = balls.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let symbol_index = symbols.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
        let names = symbols
            .iter()
            .map(|s| format!("[B{} <{} B{}]", s.target, letters.names[s.letter as usize], s.source))
            .collect();
        RecodedAlphabet { n, balls, symbols, names, ball_index, symbol_index }
    }

    /// The recoding depth `n`.
    pub fn depth(&self) -> usize {
        self.n
    }

    /// The `n`-balls `B_0, B_1, ...` in canonical order.
    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Display names `[Bi <a Bj]`.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The recoded alphabet with whitespace-free names `[Bi_<a_Bj]`.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet { names: self.names.iter().map(|n| n.replace(' ', "_")).collect() }
    }

    pub fn ball_index(&self, ball: &Ball) -> Option<usize> {
        self.ball_index.get(&ball.untagged()).copied()
    }

    pub fn symbol_index(&self, s: Symbol) -> Option<u32> {
        self.symbol_index.get(&s).copied()
    }

    /// The recoded letter for the step `B' --s--> B`.
    fn step(&self, from: usize, s: Letter, to: usize) -> Option<Letter> {
        let (symbol, inverse) = if s.inverse {
            (Symbol { target: from, letter: s.index, source: to }, true)
        } else {
            (Symbol { target: to, letter: s.index, source: from }, false)
        };
        self.symbol_index(symbol).map(|index| Letter { index, inverse })
    }

    /// `phi_n(B, alpha)` for a member with `|alpha| + n <= r(B)`.
    pub fn phi(&self, ball: &Ball, alpha: &Word) -> Result<Word, SubshiftError> {
        let mut out = Vec::with_capacity(alpha.len());
        let ball_at = |k: usize| -> Result<usize, SubshiftError> {
            let moved = ball
                .shifted(&alpha.prefix(k), self.n)
                .ok_or(SubshiftError::RadiusTooSmall { radius: ball.radius(), n: self.n })?;
            self.ball_index(&moved).ok_or_else(|| SubshiftError::InvalidBall("sub-ball is not allowed".into()))
        };
        let mut prev = ball_at(0)?;
        for (k, &s) in alpha.letters().iter().enumerate() {
            let next = ball_at(k + 1)?;
            let l = self
                .step(prev, s, next)
                .ok_or_else(|| SubshiftError::InvalidBall("transition is not a recoded symbol".into()))?;
            out.push(l);
            prev = next;
        }
        Ok(Word::from_letters(out))
    }

    /// `Psi_n`: the underlying word over the original alphabet.
    pub fn psi(&self, w: &Word) -> Word {
        Word::from_letters(
            w.letters().iter().map(|l| Letter { index: self.symbols[l.index as usize].letter, inverse: l.inverse }).collect(),
        )
    }

    /// The `n`-balls `B_0, ..., B_m` visited by a recoded word.
    fn visited(&self, w: &Word) -> Vec<usize> {
        let mut out = Vec::with_capacity(w.len() + 1);
        for (k, l) in w.letters().iter().enumerate() {
            let s = self.symbols[l.index as usize];
            let (from, to) = if l.inverse { (s.target, s.source) } else { (s.source, s.target) };
            if k == 0 {
                out.push(from);
            }
            out.push(to);
        }
        out
    }
}

/// `B^[n] = phi_n(B)^{R-n}` for an allowed `R`-ball with `n < R`.
pub fn ball_recode(ball: &Ball, alphabet: &RecodedAlphabet) -> Result<Ball, SubshiftError> {
    let n = alphabet.depth();
    let r = ball.radius();
    if n >= r {
        return Err(SubshiftError::RadiusTooSmall { radius: r, n });
    }
    let mut words = BTreeSet::new();
    for alpha in ball.words().iter().filter(|a| a.len() <= r - n) {
        words.insert(alphabet.phi(ball, alpha)?);
    }
    Ok(Ball::from_set(r - n, words, None))
}

/// Recovers `B` from `B^[n]` as the union of `Psi~_n(beta)` over its members.
pub fn unrecode(recoded: &Ball, alphabet: &RecodedAlphabet) -> Ball {
    let radius = recoded.radius() + alphabet.depth();
    let mut words = BTreeSet::from([Word::empty()]);
    for beta in recoded.words() {
        let visited = alphabet.visited(beta);
        let steps = alphabet.psi(beta);
        for (k, &b) in visited.iter().enumerate() {
            words.extend(alphabet.balls()[b].translated(&steps.prefix(k)));
        }
    }
    Ball::from_set(radius, words, None)
}
