//! Error types shared by the arithmetic and the check families.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    /// Inversion attempted against a modulus sharing a factor with the value.
    #[error("{value} is not invertible mod {modulus} (gcd {gcd})")]
    NotInvertible { value: u64, modulus: u64, gcd: u64 },

    /// A check requiring a prime (or odd prime) was handed something else.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Parameters outside the mathematical domain of the check.
    #[error("{0}")]
    Domain(String),
}

impl CheckError {
    pub fn domain(msg: impl Into<String>) -> Self {
        CheckError::Domain(msg.into())
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, CheckError::Domain(_) | CheckError::NotPrime(_))
    }
}
