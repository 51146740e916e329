use std::collections::BTreeSet;

use sepgraph_core::{Letter, Word};

use crate::error::SubshiftError;

/// A finite alphabet `A`; letters are indices into `names`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    pub names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet { names: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All signed letters `A ∪ A^-1` in letter order.
    pub fn letters(&self) -> Vec<Letter> {
        signed_letters(self.names.len())
    }

    pub fn letter_name(&self, l: Letter) -> String {
        l.render(&self.names[l.index as usize])
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(|i| self.names[i as usize].as_str())
    }

    pub fn parse(&self, text: &str) -> Result<Word, SubshiftError> {
        Word::parse(text, |name| self.names.iter().position(|n| n == name).map(|i| i as u32))
            .map_err(|e| SubshiftError::UnknownLetter(e.to_string()))
    }
}

pub(crate) fn signed_letters(size: usize) -> Vec<Letter> {
    (0..size as u32).flat_map(|i| [Letter::pos(i), Letter::neg(i)]).collect()
}

/// An `n`-ball: a right-convex set of reduced words of length at most
/// `radius` containing the empty word, optionally tagged with a base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ball {
    radius: usize,
    words: BTreeSet<Word>,
    base: Option<String>,
}

impl Ball {
    /// Builds a ball, adding the empty word and validating reducedness,
    /// lengths and right-convexity.
    pub fn new<I>(radius: usize, words: I, base: Option<String>) -> Result<Ball, SubshiftError>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut set: BTreeSet<Word> = words.into_iter().collect();
        set.insert(Word::empty());
        for w in &set {
            if !w.is_reduced() {
                return Err(SubshiftError::InvalidBall(format!("word {w} is not reduced")));
            }
            if w.len() > radius {
                return Err(SubshiftError::InvalidBall(format!("word {w} is longer than {radius}")));
            }
            if !w.is_empty() && !set.contains(&w.parent()) {
                return Err(SubshiftError::InvalidBall(format!("word {w} lacks its right segment")));
            }
        }
        Ok(Ball { radius, words: set, base })
    }

    pub(crate) fn from_set(radius: usize, words: BTreeSet<Word>, base: Option<String>) -> Ball {
        Ball { radius, words, base }
    }

    /// The radius-0 ball `{1}`.
    pub fn trivial(base: Option<String>) -> Ball {
        Ball { radius: 0, words: BTreeSet::from([Word::empty()]), base }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn base(&self) -> Option<&str> {
        self.base.as_deref()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_letter(&self, l: Letter) -> bool {
        self.words.contains(&Word::single(l))
    }

    /// Members of length one.
    pub fn letters(&self) -> Vec<Letter> {
        self.words.iter().filter(|w| w.len() == 1).map(|w| w.letters()[0]).collect()
    }

    pub fn with_base(mut self, base: Option<String>) -> Ball {
        self.base = base;
        self
    }

    /// The same ball without its base tag.
    pub fn untagged(&self) -> Ball {
        Ball { radius: self.radius, words: self.words.clone(), base: None }
    }

    /// `B^r`: members of length at most `r <= radius`.
    pub fn restrict(&self, r: usize) -> Ball {
        assert!(r <= self.radius, "restriction radius {r} exceeds {}", self.radius);
        let words = self.words.iter().filter(|w| w.len() <= r).cloned().collect();
        Ball { radius: r, words, base: self.base.clone() }
    }

    /// `(alpha.B)^r = (B alpha^-1)^r`, defined when `alpha` is a member and
    /// `|alpha| + r <= radius`. The result carries no base tag.
    pub fn shifted(&self, alpha: &Word, r: usize) -> Option<Ball> {
        if !self.contains(alpha) || alpha.len() + r > self.radius {
            return None;
        }
        let back = alpha.inverse();
        let words = self.words.iter().map(|w| w.mul(&back)).filter(|w| w.len() <= r).collect();
        Some(Ball { radius: r, words, base: None })
    }

    /// `gamma^-1.B = B gamma` as a plain set of words.
    pub fn translated(&self, gamma: &Word) -> impl Iterator<Item = Word> + '_ {
        let gamma = gamma.clone();
        self.words.iter().map(move |w| w.mul(&gamma))
    }

    /// Members rendered right to left, in canonical order.
    pub fn render<'a, F>(&self, name: F) -> Vec<String>
    where
        F: Fn(u32) -> &'a str + Copy,
    {
        self.words.iter().map(|w| w.render(name)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let a = Word::single(Letter::pos(0));
        let ab = a.then(Letter::pos(1));
        assert!(Ball::new(2, [ab.clone()], None).is_err());
        assert!(Ball::new(1, [a.clone(), ab.clone()], None).is_err());
        let b = Ball::new(2, [a.clone(), ab], None).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.letters(), vec![Letter::pos(0)]);
        let s = b.shifted(&a, 1).unwrap();
        assert!(s.contains_letter(Letter::pos(1)));
        assert!(s.contains_letter(Letter::neg(0)));
        assert_eq!(s.len(), 3);
    }
}
