use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("incompatible rings: {0}")]
    IncompatibleRing(String),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not invertible over the Laurent ring: {0}")]
    NotInvertible(String),

    #[error("matrix is not antihermitian")]
    NotAntihermitian,

    #[error("subalgebra is not invertible: smallest nonzero determinantal ideal is proper")]
    NotInvertibleSubalgebra,

    #[error("invertible by the determinantal criterion but the commutation matrix is singular; the congruence reduction needed for a projector is not supported")]
    UnsupportedReduction,

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("geometry too small: {0}")]
    TooShort(String),

    #[error("not modular: {0}")]
    NotModular(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("usage: {0}")]
    Usage(String),
}
