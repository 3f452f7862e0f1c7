use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("zero vector at position {0}")]
    ZeroVector(usize),

    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("map is not a bijection on {0} vertices")]
    NotBijection(usize),

    #[error("missing image for transposition {0}")]
    MissingTransposition(String),

    #[error("part size {d} does not divide vertex count {n}")]
    PartSizeMismatch { d: usize, n: usize },

    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),

    #[error("vertex set is not a coclique: {0} ~ {1}")]
    NotCoclique(usize, usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("sign vector has length {found}, expected {expected}")]
    SignLength { expected: usize, found: usize },

    #[error("zero scale factor at position {0}")]
    ZeroSign(usize),

    #[error("solver budget exhausted after {nodes} nodes (bounds {lower}..={upper})")]
    BudgetExhausted { nodes: u64, lower: usize, upper: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}
