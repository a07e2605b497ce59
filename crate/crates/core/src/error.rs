use thiserror::Error;

/// Errors raised by the algebra kit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate modulus: the zero element generates no finite quotient")]
    DegenerateModulus,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("refinement mismatch: {0}")]
    RefinementMismatch(String),
    #[error("affine image is not integral: {0}")]
    NotIntegral(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("projection family is not pairwise orthogonal: {0}")]
    InvalidProjectionFamily(String),
    #[error("no witness: {0}")]
    WitnessNotFound(String),
    #[error("incompatible family: {0}")]
    IncompatibleFamily(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("divergent series: beta = {0} must exceed 1")]
    DivergentSeries(f64),
    #[error("parse error at column {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
