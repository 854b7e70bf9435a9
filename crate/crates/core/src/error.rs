use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("class {0} does not induce a connected subgraph")]
    DisconnectedClass(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("inconsistent header: declared {declared} edges, found {found}")]
    InconsistentHeader { declared: usize, found: usize },
    #[error("coloring has {coloring} entries but graph has {graph} vertices")]
    LengthMismatch { coloring: usize, graph: usize },
    #[error("color {color} at vertex {vertex} is not below k = {k}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        k: usize,
    },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("no exact coloring with at most {0} colors; the value is finite but above the limit")]
    ExceedsColorLimit(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a cactus")]
    NotACactus,
    #[error("graph is not a block graph")]
    NotABlockGraph,
    #[error("graph is not 4-regular")]
    NotFourRegular,
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("labeling leaves vertex {0} of the auxiliary graph unlabeled")]
    IncompleteLabeling(usize),
    #[error("lifted solution violates the source contract: {0}")]
    LiftContractViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
