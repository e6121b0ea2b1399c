//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is identically zero to its truncation order")]
    ZeroSeriesDivisor,
    #[error("non-cancelling pole: numerator has {num_zeros} leading zero(s), denominator has {den_zeros}")]
    NonCancellingPole { num_zeros: usize, den_zeros: usize },
    #[error("coefficient index {index} is outside the truncation order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("truncation order must be at least 1")]
    EmptyOrder,
    #[error("modulus {0} must be even")]
    OddModulus(u64),
    #[error("modulus must be at least 2 and even, got {0}")]
    BadMomentModulus(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p = {p} must be coprime to the character modulus {modulus}")]
    PrimeDividesModulus { p: u64, modulus: u64 },
    #[error("character index {index} out of range for modulus {modulus} (phi = {phi})")]
    CharacterIndex { modulus: u64, index: usize, phi: u64 },
    #[error("invalid rational literal {0:?}")]
    RationalParse(String),
    #[error("invalid value: {0}")]
    InvalidValue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
