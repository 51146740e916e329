use std::fmt;

use thiserror::Error;

/// Source position of a graph declaration, when it came from a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Location(pub Option<usize>);

impl Location {
    pub fn line(line: usize) -> Self {
        Location(Some(line))
    }

    pub fn none() -> Self {
        Location(None)
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(line) => write!(f, "line {line}: "),
            None => Ok(()),
        }
    }
}

/// Errors raised while building or loading a separated graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{at}syntax error: {message}")]
    Syntax { at: Location, message: String },
    #[error("{at}invalid name `{name}`")]
    InvalidName { at: Location, name: String },
    #[error("{at}unknown vertex `{name}`")]
    UnknownVertex { at: Location, name: String },
    #[error("{at}unknown edge `{name}`")]
    UnknownEdge { at: Location, name: String },
    #[error("{at}duplicate name `{name}`")]
    DuplicateName { at: Location, name: String },
    #[error("{at}edge `{edge}` must run from a layer-1 vertex to a layer-0 vertex")]
    LayerMismatch { at: Location, edge: String },
    #[error("{at}edge `{edge}` does not range at `{vertex}`")]
    GroupRangeMismatch { at: Location, edge: String, vertex: String },
    #[error("{at}group `{group}` is empty")]
    EmptyGroup { at: Location, group: String },
    #[error("{at}edge `{edge}` appears in more than one group")]
    GroupOverlap { at: Location, edge: String },
    #[error("{at}edge `{edge}` is not covered by any group")]
    UncoveredEdge { at: Location, edge: String },
}

/// Errors raised by word manipulation on the double graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letters {position} and {next} of the word do not compose", next = position + 1)]
    DisconnectedWord { position: usize },
    #[error("the words do not meet at a common vertex")]
    EndpointMismatch,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}
