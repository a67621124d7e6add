use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Precondition violations. Every public operation that can reject its
/// input reports one of these; none of them panic on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(String),
    #[error("form coefficient k must be at least 1")]
    ZeroFormCoefficient,
    #[error("jacobi symbol needs an odd positive denominator, got {0}")]
    BadJacobiDenominator(String),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: String, b: String },
    #[error("a + b must be at least 1")]
    ZeroSum,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("shift modulus index {0} must be even and not divisible by 3")]
    InvalidShiftModulus(u64),
    #[error("index {0} must satisfy n > 2 and n = 2 (mod 4)")]
    InvalidShiftIndex(u64),
    #[error("unsupported form coefficient {k} for {sequence}")]
    UnsupportedForm { sequence: &'static str, k: u64 },
    #[error("empty range [{lo}, {hi}]")]
    EmptyRange { lo: u64, hi: u64 },
    #[error("invalid bound: {0}")]
    InvalidBound(String),
}
