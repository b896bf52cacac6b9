use thiserror::Error;

/// Errors raised while reading a graph from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    IndexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph6: bad character {ch:?} at byte {position}")]
    BadCharacter { position: usize, ch: char },
    #[error("graph6: truncated data, expected {expected} bytes after header, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {found} bytes of trailing data")]
    TrailingData { found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search over {elements} elements exceeds the size guard of {limit}")]
    SizeGuard { elements: usize, limit: usize },
    #[error("brute-force oracle is limited to {limit} vertices, got {order}")]
    OracleBound { order: usize, limit: usize },
    #[error("labeling domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("label {0} is not in {{0, 1, 2}}")]
    InvalidLabel(u8),
    #[error("constructed labeling failed validation: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
