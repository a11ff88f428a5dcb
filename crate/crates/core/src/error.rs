use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Pauli factor {found:?} at position {position}")]
    InvalidPauliChar { position: usize, found: char },

    #[error("Pauli string has {found} factors, expected {expected}")]
    InvalidPauliLength { expected: usize, found: usize },

    #[error("operators act on different qubit counts ({0} vs {1})")]
    QubitMismatch(usize, usize),

    #[error("set {label}: joint projector for sign pattern {pattern:?} has rank {rank}, expected 1")]
    NotRankOne {
        label: String,
        pattern: Vec<i8>,
        rank: i64,
    },

    #[error("set {label}: operators do not pairwise commute")]
    NonCommuting { label: String },

    #[error("ray table diverges from the reference listing at id {id}: {reason}")]
    GoldenMismatch { id: usize, reason: String },

    #[error("ray is a joint eigenvector of {0} commuting sets, expected exactly one")]
    AmbiguousBlock(usize),

    #[error("ray id {0} is not in the table")]
    UnknownRay(usize),

    #[error("operators are dependent: rank {rank}, expected {expected}")]
    DependentOperators { rank: usize, expected: usize },

    #[error("the identity has no point in the polar space")]
    IdentityPoint,

    #[error("subspace {0} has points off the quadric")]
    NotOnQuadric(usize),

    #[error("generator-system relation is not transitive on spaces {0}, {1}, {2}")]
    InconsistentSystems(usize, usize, usize),

    #[error("not a complete basis: {0}")]
    IncompleteBasis(String),

    #[error("assignment has {found} values, instance has {expected} rays")]
    AssignmentSize { expected: usize, found: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
