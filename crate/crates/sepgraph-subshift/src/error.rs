use sepgraph_bratteli::BratteliError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubshiftError {
    #[error("ball enumeration exceeds the budget of {budget} balls")]
    SizeLimitExceeded { budget: usize },
    #[error("invalid ball: {0}")]
    InvalidBall(String),
    #[error("cannot recode a ball of radius {radius} by {n}")]
    RadiusTooSmall { radius: usize, n: usize },
    #[error("forbidden ball of radius {radius} exceeds the step {step}")]
    ForbiddenTooLarge { radius: usize, step: usize },
    #[error("ball set is not pruning-stable: {0}")]
    UnstableBallSet(String),
    #[error("the allowed ball set is empty")]
    EmptyBallSet,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no vertex has this ball")]
    NoSuchBall,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
}
