use thiserror::Error;

/// Errors raised across the library. The CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a square in Q(t): {0}")]
    NotASquare(String),
    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),
    #[error("unsupported stratum: {0}")]
    UnsupportedStratum(String),
    #[error("duplicate root: {0}")]
    DuplicateRoot(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("cannot combine re-embeddings: {0}")]
    Combination(String),
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("invalid projection plane: {0}")]
    InvalidPlane(String),
    #[error("infeasible system: {0}")]
    Infeasible(String),
    #[error("scaling required: {0}")]
    ScalingRequired(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
