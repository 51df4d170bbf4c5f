use thiserror::Error;

use crate::biclique::BicliquePartition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} needs at least one vertex")]
    EmptyGraph(&'static str),
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("relabelling is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("not a split partition: {0}")]
    NotSplitPartition(String),
    #[error("graph is not split; use the exact solver instead")]
    NotSplit,
    #[error("expected a {expected} split partition, got {got}")]
    WrongClass {
        expected: &'static str,
        got: &'static str,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("biclique {index} mentions vertex {vertex}, which is not in the graph")]
    UnknownVertex { index: usize, vertex: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Split(#[from] SplitError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("strings of unequal length: {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("string length {len} exceeds the limit {limit} for this computation")]
    TooLong { len: usize, limit: usize },
    #[error("invalid symbol {0:?}; expected 0, 1 or *")]
    BadSymbol(char),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("partition is not valid for the graph: {0}")]
    InvalidPartition(String),
    #[error("graham-pollak addressing needs n >= 2, got {0}")]
    TooFewVertices(usize),
}

#[derive(Debug, Error, Clone)]
pub enum SolverError {
    #[error("graph has {m} edges, solver limit is {limit}")]
    TooManyEdges { m: usize, limit: usize },
    #[error("graph has {n} vertices, solver supports at most 64")]
    TooManyVertices { n: usize },
    #[error("search budget exhausted; best partition found has {upper_bound} bicliques (not proven optimal)")]
    BudgetExceeded {
        upper_bound: usize,
        witness: BicliquePartition,
        nodes_explored: u64,
    },
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("split graph needs at least one vertex")]
    EmptySplit,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
