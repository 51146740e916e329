use sepgraph_bratteli::BratteliError;
use sepgraph_hereditary::HereditaryError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
}
