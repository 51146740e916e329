use sepgraph_bratteli::BratteliError;
use sepgraph_hereditary::HereditaryError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordShiftError {
    #[error("`{0}` is not a binary word")]
    InvalidWord(String),
    #[error("forbidden words of length {length} exceed the automaton limit of {limit}")]
    ForbiddenTooLong { length: usize, limit: usize },
    #[error("the ideal is not generated at level {level} on the levels up to {checked}")]
    NotFiniteType { level: usize, checked: usize },
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
}
