use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("vertex {0} is isolated; normalized Laplacian undefined")]
    IsolatedVertex(usize),

    #[error("graph6 parse error at byte {0}: {1}")]
    Graph6(usize, #[source] Graph6Reason),

    #[error(
        "order {0} exceeds the built-in enumerator cap of {1}; ingest a graph6 corpus instead"
    )]
    EnumerationCap(usize, usize),

    #[error("input is not a tree (n={n}, m={m})")]
    NotATree { n: usize, m: usize },

    #[error("partition does not cover the index set disjointly")]
    BadPartition,

    #[error("part {0} of the joined union is not regular")]
    NonRegularPart(usize),

    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),

    #[error("exact arithmetic unavailable: {0}")]
    NotExact(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("structure hint is inconsistent with the graph: {0}")]
    BadHint(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// What went wrong while decoding a graph6 byte stream.
#[derive(Debug, Error)]
pub enum Graph6Reason {
    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    BadByte(u8),
    #[error("truncated input: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("order field malformed")]
    BadOrder,
    #[error("padding bits are not zero")]
    BadPadding,
}

pub type Result<T> = std::result::Result<T, Error>;
