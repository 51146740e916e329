use sepgraph_bratteli::BratteliError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HereditaryError {
    #[error("the vertex set at level {level} is not hereditary")]
    InputNotHereditary { level: usize },
    #[error("the vertex set at level {level} is not saturated")]
    InputNotSaturated { level: usize },
    #[error("levels {level} and {next} are inconsistent: the lift of the lower set is not contained in the upper one", next = level + 1)]
    InconsistentLevels { level: usize },
    #[error("more than {cap} closed sets")]
    SizeLimitExceeded { cap: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
}
