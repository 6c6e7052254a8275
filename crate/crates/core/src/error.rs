use thiserror::Error;

/// Errors raised by the group operations and the text front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: String },

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("exponent zero in token {0:?}")]
    ZeroExponent(String),

    #[error("exponent {exponent} in token {token:?} exceeds the expansion limit {limit}")]
    ExponentTooLarge {
        token: String,
        exponent: String,
        limit: u64,
    },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("chain is not a cycle (nonzero boundary)")]
    NotACycle,

    #[error("rank {rank} too small: need at least {needed}")]
    RankTooSmall { rank: usize, needed: usize },

    #[error("invalid axes {axes:?} for rank {rank}: need strictly increasing indices in 1..={rank}")]
    BadAxes { axes: Vec<usize>, rank: usize },

    #[error("satellite level mismatch: {left} vs {right}")]
    LevelMismatch { left: String, right: String },

    #[error("unknown satellite generator {0:?}")]
    UnknownGenerator(String),

    #[error("perturbation value at {vertex} is not a cycle")]
    NonCycleValue { vertex: String },

    #[error("perturbation must vanish at the origin to keep the cocycle normalized")]
    PerturbationAtOrigin,

    #[error("invalid vector {0:?}: expected comma-separated integers")]
    BadVector(String),

    #[error("malformed JSON input: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
