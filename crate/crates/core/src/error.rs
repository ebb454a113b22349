use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex count {requested} exceeds the configured cap of {cap}")]
    SizeCap { requested: u128, cap: usize },

    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("malformed biclique: {0}")]
    MalformedBiclique(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot read {0}")]
    Io(String),

    #[error("not a tree: {0}")]
    NotATree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
