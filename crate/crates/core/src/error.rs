use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} is outside [1, {degree}]")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree {0} is not supported (must be between 1 and {max})", max = crate::perm::MAX_DEGREE)]
    BadDegree(usize),

    #[error("restriction is not injective: points {0} and {1} share an image")]
    NonInjectiveRestriction(usize, usize),

    #[error("partial permutation is not injective: image {0} repeated")]
    NotInjective(usize),

    #[error("duplicate point {0} in domain")]
    DuplicatePoint(usize),

    #[error("not a permutation")]
    NotAPermutation,

    #[error("cycles overlap at point {0}")]
    OverlappingCycles(usize),

    #[error("domain of right factor does not equal image of left factor")]
    ChainMismatch,

    #[error("invalid kernel partition: {0}")]
    BadPartition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{id} is defined only for {constraint} (got {got})")]
    OutOfRange {
        id: String,
        constraint: &'static str,
        got: String,
    },

    #[error("no closed formula for {0}")]
    NoFormula(String),

    #[error("budget exceeded after {reached} units of work (cap {cap})")]
    BudgetExceeded { reached: u64, cap: u64 },

    #[error("element {0} is not a member")]
    NotAMember(String),

    #[error("expected a transformation of rank {expected}, got rank {got}")]
    WrongRank { expected: usize, got: usize },

    #[error("bad kernel: {0}")]
    BadKernel(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("snapshot error: {0}")]
    Snapshot(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
