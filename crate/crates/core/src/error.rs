use thiserror::Error;

/// Errors raised by the ortholat engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order relation contains a directed cycle through {0:?}")]
    CyclicOrder(Vec<String>),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid order matrix: {0}")]
    InvalidOrder(String),
    #[error("membership functions are defined on different universes")]
    UniverseMismatch,
    #[error("not a lattice: `{0}` and `{1}` lack a {2}")]
    NotALattice(String, String, BoundKind),
    #[error("lattice is not bounded")]
    Unbounded,
    #[error("internal disagreement between independent criteria: {0}")]
    InternalDisagreement(String),
    #[error("invalid orthocomplementation: {0}")]
    InvalidOrthoMap(String),
    #[error("map covers {got} of {expected} carrier elements")]
    PartialMap { expected: usize, got: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("negation is not an ortho negation")]
    NotOrtho,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("negation of `{0}` is not in the function set")]
    NegationNotClosed(String),
    #[error("function set is not closed: {0}")]
    NotClosed(String),
    #[error("universe of size {size} exceeds cap {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("carrier size {n} exceeds cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Which bound is missing when a pair fails the lattice test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Join,
    Meet,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Join => f.write_str("least upper bound"),
            BoundKind::Meet => f.write_str("greatest lower bound"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
