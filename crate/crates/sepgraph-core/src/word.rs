use std::cmp::Ordering;
use std::fmt;

/// A signed letter over an indexed alphabet.
///
/// For separated graphs the index is an edge id and `inverse` selects `e^-1`.
/// The derived order is `(index, inverse)`, so `e < e~ < f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: u32) -> Self {
        Letter { index, inverse: false }
    }

    pub fn neg(index: u32) -> Self {
        Letter { index, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    /// Formats the letter as `name` or `name~`.
    pub fn render(self, name: &str) -> String {
        if self.inverse {
            format!("{name}~")
        } else {
            name.to_string()
        }
    }
}

/// A finite word of letters.
///
/// Words are read right to left: `letters()[0]` is applied first and is
/// printed last. The canonical order compares length first and then the
/// letters in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from letters in application order.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letter applied first (the rightmost one when printed).
    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// The letter applied last (the leftmost one when printed).
    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Returns `letter * self`, the word extended by one more letter on the left.
    pub fn then(&self, letter: Letter) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    /// The word without its last applied letter.
    pub fn parent(&self) -> Word {
        let mut letters = self.0.clone();
        letters.pop();
        Word(letters)
    }

    /// The segment consisting of the first `n` applied letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// True when no letter is immediately followed by its inverse.
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inv())
    }

    /// Free reduction of the word.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free-group product `self * other` (other applied first), reduced.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = other.0.clone();
        letters.extend_from_slice(&self.0);
        Word(letters).reduce()
    }

    /// Prints the word right to left with the given letter names.
    pub fn render<'a, F>(&self, name: F) -> String
    where
        F: Fn(u32) -> &'a str,
    {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .rev()
            .map(|l| l.render(name(l.index)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a right-to-left whitespace separated word; `1` or an empty
    /// string is the empty word.
    pub fn parse<F>(text: &str, lookup: F) -> Result<Word, crate::WordError>
    where
        F: Fn(&str) -> Option<u32>,
    {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace().rev() {
            let (name, inverse) = match token.strip_suffix('~') {
                Some(stripped) => (stripped, true),
                None => (token, false),
            };
            let index = lookup(name).ok_or_else(|| crate::WordError::UnknownLetter(token.to_string()))?;
            letters.push(Letter { index, inverse });
        }
        Ok(Word(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|l| if l.inverse { format!("{}~", l.index) } else { l.index.to_string() })
            .collect();
        if names.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", names.join(" "))
        }
    }
}
