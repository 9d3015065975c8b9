use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `line` is the 1-based input line; for graphs built from an edge
    /// iterator it is the 1-based position of the offending edge.
    #[error("line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: usize },

    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: label {label} outside 1..={n}")]
    LabelOutOfRange { line: usize, label: i64, n: usize },

    #[error("base graph must have at least 2 vertices, got {n}")]
    OrderTooSmall { n: usize },

    #[error("dimension t must be at least 1")]
    InvalidDimension,

    #[error("explicit cap must be at least 1")]
    InvalidCap,

    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("letter {letter} outside alphabet of size {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("rank {rank} outside [0, {vertex_count})")]
    RankOutOfRange {
        rank: BigUint,
        vertex_count: BigUint,
    },

    #[error(
        "S(G,t) has {vertices} vertices, above the explicit cap of {cap}; \
         use the closed-form commands (degseq, zagreb) instead"
    )]
    CapExceeded { vertices: BigUint, cap: u64 },

    #[error("exponent must be non-negative, got {0}")]
    NegativeExponent(i64),

    #[error("base graph is not a tree")]
    NotATree,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
