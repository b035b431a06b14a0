use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("base graph must be connected")]
    Disconnected,
    #[error("invalid graph family: {0}")]
    InvalidFamily(String),
    #[error("gadget degree {0} outside supported range 1..=20")]
    DegreeTooLarge(usize),
    #[error("subset {mask:#b} is not an even subset of a {d}-element set")]
    NotEvenSubset { mask: u64, d: usize },
    #[error("vertex {0} is not a link vertex")]
    NotALink(usize),
    #[error("{a} and {b} are not adjacent in the base graph")]
    NotAnEdge { a: usize, b: usize },
    #[error("map is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("map is not an automorphism")]
    NotAnAutomorphism,
    #[error("map is not twin-preserving")]
    NotTwinPreserving,
    #[error("map is not gadget-preserving")]
    NotGadgetPreserving,
    #[error("colour vector has length {got}, expected {expected}")]
    ColourLength { got: usize, expected: usize },
    #[error("input is not a CFI graph: {0}")]
    NotCfi(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
