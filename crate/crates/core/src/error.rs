use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A malformed line in an edge-list file. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("node {node} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("power-law fit failed: {0}")]
    Fit(String),

    #[error("modularity undefined: graph has no edges")]
    ModularityUndefined,

    #[error("no reachable pairs")]
    NoReachablePairs,

    #[error("graph has {edges} edges, above the limit of {limit} for this operation")]
    SizeLimit { edges: usize, limit: usize },

    /// An error tied to a particular input file.
    #[error("{path}: {source}")]
    Input { path: String, source: Box<Error> },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
