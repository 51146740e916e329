use std::fmt;
use std::str::FromStr;

use crate::error::WordShiftError;

/// A finite word over the alphabet `{0, 1}`, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord(String);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(String::new())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Whether `block` occurs as consecutive letters of `self`.
    pub fn contains_block(&self, block: &BinaryWord) -> bool {
        self.0.contains(block.as_str())
    }

    /// All `2^n` words of length `n` in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<BinaryWord> {
        (0..1u64 << n)
            .map(|bits| BinaryWord((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { '1' } else { '0' }).collect()))
            .collect()
    }

    /// The cyclic rotations `a_i ... a_n a_1 ... a_{i-1}`, without repetition.
    pub fn rotations(&self) -> Vec<BinaryWord> {
        let mut out: Vec<BinaryWord> = (0..self.len().max(1))
            .map(|i| BinaryWord(format!("{}{}", &self.0[i.min(self.len())..], &self.0[..i.min(self.len())])))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub(crate) fn from_bytes(bytes: &[u8]) -> Self {
        BinaryWord(String::from_utf8(bytes.to_vec()).expect("binary letters are ASCII"))
    }
}

impl FromStr for BinaryWord {
    type Err = WordShiftError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.bytes().all(|b| b == b'0' || b == b'1') {
            Ok(BinaryWord(s.to_string()))
        } else {
            Err(WordShiftError::InvalidWord(s.to_string()))
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Parses a comma-separated list of binary words; blank entries are skipped.
pub fn parse_word_list(text: &str) -> Result<Vec<BinaryWord>, WordShiftError> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}
