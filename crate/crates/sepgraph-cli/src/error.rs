use std::path::PathBuf;

use sepgraph_bratteli::BratteliError;
use sepgraph_classify::ClassifyError;
use sepgraph_core::GraphError;
use sepgraph_hereditary::HereditaryError;
use sepgraph_prime::PrimeError;
use sepgraph_subshift::SubshiftError;
use sepgraph_wordshift::WordShiftError;

/// A domain error of a dispatched command; reported with exit code 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error("unknown corpus graph `{0}`")]
    UnknownCorpus(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
    #[error(transparent)]
    Subshift(#[from] SubshiftError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error(transparent)]
    WordShift(#[from] WordShiftError),
    #[error("{failed} of {total} acceptance criteria failed")]
    ReproFailed { failed: usize, total: usize },
}
