use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{what} needs {needed} but the limit is {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("element {0} out of range for a carrier of size {1}")]
    OutOfRange(usize, usize),
    #[error("generators must not contain the identity")]
    IdentityGenerator,
    #[error("generating set misses {missed:?}")]
    NotGenerating { missed: Vec<usize> },
    #[error("generator {generator} is redundant: it equals the word {witness:?}")]
    Redundant { generator: usize, witness: Vec<usize> },
    #[error("vertex {0} is missing from its own neighborhood")]
    NotReflexive(usize),
    #[error("filter base must be nonempty")]
    EmptyFilter,
    #[error("map is not continuous at vertex {0}")]
    NotContinuous(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("query does not come from Cayley graphs")]
    NotCayley,
    #[error("window does not cover {0} and its successor")]
    WindowTooSmall(i64),
    #[error("inner map is not continuous at {0}")]
    HypothesisViolated(usize),
    #[error("function is not differentiable at {0}")]
    NotDifferentiable(String),
    #[error("codomain is not T1")]
    NotT1,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, needed: u128, limit: u128) -> Self {
        Error::SizeGuardExceeded { what, needed, limit }
    }
}

impl Error {
    /// A short stable identifier for the error kind, e.g. `not-associative`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedTable(_) => "malformed-table",
            Error::NoIdentity => "no-identity",
            Error::NoInverse(_) => "no-inverse",
            Error::NotAssociative(..) => "not-associative",
            Error::SizeGuardExceeded { .. } => "size-guard",
            Error::OutOfRange(..) => "out-of-range",
            Error::IdentityGenerator => "identity-generator",
            Error::NotGenerating { .. } => "not-generating",
            Error::Redundant { .. } => "redundant-generator",
            Error::NotReflexive(_) => "not-reflexive",
            Error::EmptyFilter => "empty-filter",
            Error::NotContinuous(_) => "not-continuous",
            Error::DimMismatch { .. } => "dim-mismatch",
            Error::NotCayley => "not-cayley",
            Error::WindowTooSmall(_) => "window-too-small",
            Error::HypothesisViolated(_) => "hypothesis-violated",
            Error::NotDifferentiable(_) => "not-differentiable",
            Error::NotT1 => "not-t1",
            Error::Parse { .. } => "parse",
            Error::Invalid(_) => "invalid",
        }
    }
}
