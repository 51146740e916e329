use sepgraph_core::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BratteliError {
    #[error("level {level} would have {count} vertices, over the budget of {budget}")]
    SizeLimitExceeded { level: usize, count: u128, budget: usize },
    #[error("derived names collide: {0}")]
    Naming(GraphError),
    #[error("level {level} is above the tower height {height}")]
    LevelOutOfRange { level: usize, height: usize },
}
