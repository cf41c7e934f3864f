use thiserror::Error;

/// Every failure the library can report.
///
/// Variants map one-to-one onto the error kinds of the public operations so
/// front ends (the CLI, the Python bindings) can translate them into exit
/// codes or exception types without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("coefficient not divisible by {divisor} at term {term}")]
    NotDivisible { divisor: String, term: String },

    #[error("variable `{0}` has no assigned image")]
    UnassignedVariable(String),

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("operation requires coefficient domain {expected}")]
    DomainMismatch { expected: &'static str },

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),

    #[error("not a relation: residual {residual}")]
    NotARelation { residual: String },

    #[error("wrong arity: expected {expected}, got {actual}")]
    WrongArity { expected: usize, actual: usize },

    #[error("incompatible relations: {0}")]
    IncompatibleRelations(String),

    #[error("index error: {0}")]
    IndexError(String),

    #[error("decomposition invalid: {0}")]
    DecompositionInvalid(String),

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
