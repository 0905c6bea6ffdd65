use thiserror::Error;

/// Input and precondition errors.
///
/// These are deliberately distinct from the algorithmic "no such tree"
/// answer, which is carried by [`crate::TreeOutcome::No`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("sequence of length {len} is not a permutation of 0..{len}")]
    NotAPermutation { len: usize },
    #[error("order has {order_len} entries but the graph has {n} vertices")]
    OrderLengthMismatch { order_len: usize, n: usize },
    #[error("order is not a perfect elimination order of the graph")]
    NotPerfectElimination,
    #[error("order is not a strong elimination order of the graph")]
    NotStrongElimination,
    #[error("connectivity parameter k={k} must satisfy 1 <= k < n={n}")]
    InvalidConnectivityParameter { k: usize, n: usize },
    #[error("positions {i} and {j} do not hold adjacent vertices")]
    NonAdjacentPair { i: usize, j: usize },
    #[error("vertex {vertex} has no neighbor later in the order")]
    NoLaterNeighbor { vertex: usize },
    #[error("graph on {n} vertices requires at least 3 for this algorithm")]
    TooFewVertices { n: usize },
    #[error("arc model is invalid: {0}")]
    InvalidModel(String),
    #[error("arc model is not proper: arc {outer} contains arc {inner}")]
    NotProper { outer: usize, inner: usize },
    #[error("no arc of density 1; the model has no interval reduction")]
    NoUnitDensityArc,
    #[error("oracle refuses n={n} above its bound {bound}; raise the bound explicitly")]
    OracleBound { n: usize, bound: usize },
    #[error("spanning tree enumeration exceeded the cap of {cap}")]
    TreeCapExceeded { cap: usize },
    #[error("generator gave up after {attempts} attempts; retry with another seed")]
    GenBudgetExhausted { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
