use thiserror::Error;

use crate::lang::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("generator g{index} out of range for a {dim}-generator algebra")]
    GeneratorOutOfRange { index: usize, dim: usize },

    #[error("not a unit negative-square bivector")]
    NotUnitBivector,

    #[error("power series did not converge within {0} terms")]
    SeriesNotConverged(usize),

    #[error("not in ideal")]
    NotInIdeal,

    #[error("not in even subalgebra")]
    NotEven,

    #[error("slot mismatch: {0} vs {1}")]
    SlotMismatch(usize, usize),

    #[error("tensor product of an empty list")]
    EmptyTensor,

    #[error("expected {expected} amplitudes, found {found}")]
    AmplitudeCount { expected: usize, found: usize },

    #[error("the zero state cannot be teleported")]
    ZeroState,

    #[error("Hamiltonian parameters are all zero")]
    ZeroParameters,

    #[error("matrix is not normal (commutator residual {0:e})")]
    NonNormal(f64),

    #[error("power iteration did not converge after {0} iterations")]
    NotConverged(usize),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("unbound name {0:?}")]
    Unbound(String),

    #[error("type error: {0}")]
    Type(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
