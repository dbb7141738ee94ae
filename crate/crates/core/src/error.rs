use thiserror::Error;

use crate::orderings::ViolationWitness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} listed twice")]
    DuplicateVertex { vertex: usize },
    #[error("{what} needs at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("ordering has {got} entries but the graph has {expected} vertices")]
    OrderingLength { expected: usize, got: usize },
    #[error("not a permutation of 0..n: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("not an augmented adjacency matrix: entry ({row}, {col}) breaks symmetry or the unit diagonal")]
    NotAugmented { row: usize, col: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph has {n} vertices, above the search bound of {bound}")]
    TooLarge { n: usize, bound: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("not an MPTG ordering: {0}")]
    NotMptgOrdering(ViolationWitness),
    #[error("not a proper MPTG ordering: {0}")]
    NotProperOrdering(ViolationWitness),
    #[error("relation needs positions i < j < n, got i={i}, j={j}, n={n}")]
    BadPair { i: usize, j: usize, n: usize },
    #[error("precedence is not transitive: b{} < b{} < b{} < b{}", .cycle[0] + 1, .cycle[1] + 1, .cycle[2] + 1, .cycle[0] + 1)]
    Inconsistent { cycle: [usize; 3] },
    #[error("positions {} < {} are non-adjacent but b{} precedes b{}", .i + 1, .j + 1, .j + 1, .i + 1)]
    NonEdgeOrder { i: usize, j: usize },
    #[error("canonical sequence breaks the {which} order")]
    OrderBroken { which: &'static str },
    #[error("malformed canonical sequence: {0}")]
    MalformedSequence(String),
    #[error("unit realization has an empty window at step {step}")]
    UnitInfeasible { step: usize },
    #[error("unit length must be positive")]
    NonPositiveLength,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum ReprError {
    #[error("bad rational `{0}`")]
    BadRational(String),
    #[error("vertex {}: point lies outside its interval", .vertex + 1)]
    PointOutside { vertex: usize },
    #[error("vertex {}: interval must have a < b", .vertex + 1)]
    EmptyInterval { vertex: usize },
    #[error("vertex {}: tolerance must be positive", .vertex + 1)]
    NonPositiveTolerance { vertex: usize },
    #[error("vertex ids must be exactly 1..=n: {0}")]
    Ids(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("epsilon must lie strictly between 0 and 1")]
    BadEpsilon,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
