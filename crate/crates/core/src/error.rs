use thiserror::Error;

use crate::scalar::FieldSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field modulus must be prime (got {0})")]
    NotPrime(u64),

    #[error("field modulus {0} is out of range (must be below 2^31)")]
    ModulusOutOfRange(u64),

    #[error("scalar {value:?} does not exist in {field}")]
    NotInField { value: String, field: FieldSpec },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not invertible (rank {rank} of {size})")]
    NotInvertible { rank: usize, size: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed identity: {0}")]
    MalformedIdentity(String),

    #[error("declared unit is not a unit: {0}")]
    NotAUnit(String),

    #[error("symmetrization undefined in characteristic 2 (the circle product carries a factor 1/2)")]
    CharacteristicTwo,

    #[error("algebra {0:?} has no declared unit; the operator a⊗b ↦ αab⊗1 + β1⊗ab − γa⊗b needs the element 1")]
    MissingUnit(String),

    #[error("not a Lie algebra: identity {0} fails")]
    NotLie(String),

    #[error("z is not central: [z, {label}] = {value} ≠ 0")]
    NotCentral { label: String, value: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
