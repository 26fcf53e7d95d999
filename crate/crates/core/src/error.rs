use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange { what: &'static str, value: String, allowed: String },

    #[error("max index is undefined for the constant monomial")]
    ConstantMonomial,

    #[error("inconsistent constraints in degree {degree}: {detail}")]
    InconsistentConstraints { degree: usize, detail: String },

    #[error("no horizon: supply a Hilbert polynomial or equal lower/upper Hilbert-function bounds in the last constrained degree")]
    NoHorizon,

    #[error("empty family: no Hilbert function satisfies the constraints")]
    EmptyFamily,

    #[error("not an O-sequence: growth condition fails in degree {degree}")]
    NotOSequence { degree: usize },

    #[error("instance too large: {estimate} exceeds the ceiling {ceiling}")]
    InstanceTooLarge { estimate: String, ceiling: String },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
