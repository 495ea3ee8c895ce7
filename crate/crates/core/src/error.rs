use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid grading group: {0}")]
    InvalidGroup(String),
    #[error("invalid sign form: {0}")]
    InvalidSignForm(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed ring: {0}")]
    MalformedRing(String),
    #[error("ring axioms violated: {0}")]
    AxiomViolation(String),
    #[error("objects belong to different rings")]
    ParentMismatch,
    #[error("morphisms are not composable: target {target} differs from source {source_deg}")]
    NotComposable { target: String, source_deg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("structure check failed: {0}")]
    StructureCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not prime: {0}")]
    NotPrime(String),
}

pub type Result<T> = std::result::Result<T, Error>;
