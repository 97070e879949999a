use thiserror::Error;

/// Errors raised by the lattice, geometry and Euler-obstruction routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("not a sublattice: {0}")]
    NotSublattice(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid fraction {d}/{k}: need 0 <= k < d and gcd(d, k) = 1")]
    InvalidFraction { d: String, k: String },
    #[error("invalid continued fraction: {0}")]
    InvalidExpansion(String),
    #[error("degenerate cone: generators are linearly dependent")]
    DegenerateCone,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("face is not an edge of the polytope")]
    NotAnEdge,
    #[error("not a piecewise linear lattice polygon: {0}")]
    NotPllp(String),
    #[error("expected a polytope of dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("singularities are not isolated: {0}")]
    NotIsolated(String),
    #[error("weights are not reduced: {0:?}")]
    NotReduced(Vec<u64>),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("congruence has no solution: {0}")]
    Unsolvable(String),
    #[error("independent computations disagree: {0}")]
    OracleMismatch(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
