use std::io::Read;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sepgraph_core::{corpus_graph, load, SeparatedGraph};
use sepgraph_subshift::{Alphabet, Ball};

use crate::error::CliError;

/// Prefix selecting a built-in example graph instead of a file.
const CORPUS_PREFIX: &str = "corpus:";

pub(crate) fn read_text(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io { path: PathBuf::from("<stdin>"), source })?;
        return Ok(text);
    }
    std::fs::read_to_string(input).map_err(|source| CliError::Io { path: PathBuf::from(input), source })
}

/// Loads a graph from an SGF path, `-` for standard input, or `corpus:NAME`.
pub fn load_graph(input: &str) -> Result<SeparatedGraph, CliError> {
    if let Some(name) = input.strip_prefix(CORPUS_PREFIX) {
        return corpus_graph(name).ok_or_else(|| CliError::UnknownCorpus(name.to_string()));
    }
    let text = read_text(input)?;
    load(&text).map_err(|source| CliError::Graph { path: input.to_string(), source })
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Splits a comma-separated list, dropping blanks.
pub(crate) fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

/// A forbidden ball: its radius and its words, each written as
/// space-separated letters with `~` for inverses and `1` for the empty word.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallSpec {
    pub radius: usize,
    pub words: Vec<String>,
}

/// A finite-type convex subshift over a free group.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubshiftSpec {
    pub alphabet: Vec<String>,
    /// The step `R`: every forbidden ball has radius at most `R`.
    pub radius: usize,
    #[serde(default)]
    pub forbidden: Vec<BallSpec>,
    /// Recoding depth; defaults to `radius - 1`.
    #[serde(default)]
    pub n: Option<usize>,
}

impl SubshiftSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let spec: SubshiftSpec = serde_json::from_str(text)?;
        if spec.alphabet.is_empty() {
            return Err(CliError::Input("the alphabet is empty".to_string()));
        }
        Ok(spec)
    }

    pub fn letters(&self) -> Alphabet {
        Alphabet::new(&self.alphabet)
    }

    pub fn forbidden_balls(&self) -> Result<Vec<Ball>, CliError> {
        let letters = self.letters();
        self.forbidden
            .iter()
            .map(|b| {
                let words = b.words.iter().map(|w| letters.parse(w)).collect::<Result<Vec<_>, _>>()?;
                Ok(Ball::new(b.radius, words, None)?)
            })
            .collect()
    }
}
