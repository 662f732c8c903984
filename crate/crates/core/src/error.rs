use thiserror::Error;

use crate::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The divisor does not divide the dividend in the Laurent ring.
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: LaurentPoly },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("composition sums to {actual}, expected {expected}")]
    SumMismatch { expected: u32, actual: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
