use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("more than {cap} Galois-closed sets")]
    PairCapExceeded { cap: usize },
    #[error("unknown signed edge `{0}`")]
    UnknownEdge(String),
}
