use thiserror::Error;

/// Validation and resource errors for user-facing inputs.
///
/// Internal contract violations (a relation whose lead term comes out wrong,
/// a factorization the theory guarantees but the search misses) are bugs and
/// panic instead of returning one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be at least 3 (got n = {n})")]
    GroupOrderTooSmall { n: u64 },

    #[error("expected 2 or 3 weights (got {got})")]
    WeightCount { got: usize },

    #[error("weights must lie strictly between 0 and n = {n} (got {w})")]
    WeightOutOfRange { w: u64, n: u64 },

    #[error("weights must satisfy b + c + d = 0 (mod n): n = {n} does not divide {sum}")]
    DeterminantCondition { n: u64, sum: u64 },

    #[error("vertex count must be between 3 and {max} (got {m})")]
    VertexCount { m: usize, max: usize },

    #[error("cannot delete {s} cycle edges from a graph on {m} vertices")]
    CycleDeletions { s: usize, m: usize },

    #[error("edge ({a}, {b}) out of range for {m} vertices (vertices are 1-based)")]
    EdgeOutOfRange { a: usize, b: usize, m: usize },

    #[error("loops are not allowed (edge ({v}, {v}))")]
    Loop { v: usize },

    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: usize, b: usize },

    #[error("field characteristic must be 0 or a prime below 2^31 (got {p})")]
    Characteristic { p: u64 },

    #[error("subset enumeration over {m} vertices exceeds the limit of {limit}")]
    TooManyVertices { m: usize, limit: usize },

    #[error("vertex weights must be positive and match the vertex count")]
    BadVertexWeights,

    #[error("{0}")]
    BadGraphJson(String),
}
