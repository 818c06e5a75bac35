use thiserror::Error;

/// Errors raised by graph, engine and reduction operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex set capacity {found} does not match graph order {expected}")]
    CapacityMismatch { expected: usize, found: usize },
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("paley graphs need a prime modulus congruent to 1 mod 4, got {0}")]
    InvalidPaleyModulus(u64),
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("order must be positive")]
    InvalidOrder,
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("{0} generators exceed the exhaustive search limit of 63")]
    TooManyGenerators(usize),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("side one of the bipartite graph is empty")]
    EmptySideOne,
    #[error("edge {0}-{1} is not covered")]
    NotACover(usize, usize),
    #[error("cover is empty")]
    EmptyCover,
    #[error("parameter k must be at least 1")]
    ParameterTooSmall,
    #[error("no prime q with {low} < q <= {high} and q = 1 mod 4")]
    NoSuchPrime { low: u64, high: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
