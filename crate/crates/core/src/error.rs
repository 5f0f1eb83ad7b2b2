use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("star partition needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("not neighbor-nested: neighborhoods of {0} and {1} are incomparable")]
    NotNested(usize, usize),
    #[error("columns must be positive and non-increasing: {0:?}")]
    InvalidDiagram(Vec<usize>),
    #[error("diagram needs {needed} vertices but only {available} are available")]
    InsufficientVertices { needed: usize, available: usize },
    #[error("{e} edges exceed the maximum {max} for {n} vertices")]
    TooManyEdges { n: usize, e: usize, max: usize },
    #[error("no triangle-free graph on {n} vertices has {e} edges (Mantel bound {max})")]
    NoTriangleFreeHost { n: usize, e: usize, max: usize },
    #[error("no alpha >= 1 with alpha (n - alpha) <= e for n = {n}, e = {e}")]
    NoBalancedSplit { n: usize, e: usize },
    #[error("star leaf count must be at least {min}, got {k}")]
    LeafCount { k: usize, min: usize },
    #[error("enumeration of {required} hosts exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
