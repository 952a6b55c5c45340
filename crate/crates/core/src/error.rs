use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the arithmetic, representation and descent layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{a} is not a quadratic residue modulo {p}")]
    NoRoot { a: i128, p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The input lies outside the residue classes the requested
    /// representation exists for.
    #[error("{0}")]
    WrongClass(String),

    #[error("{0} exceeds the supported range")]
    OutOfRange(String),

    #[error("{m} exceeds the oracle bound {bound}")]
    OracleBound { m: u64, bound: u64 },

    /// An arithmetic fact that the descent relies on failed to hold.
    #[error("internal error: {0}")]
    Internal(String),
}
