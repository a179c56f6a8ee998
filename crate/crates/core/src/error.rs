use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("q = {q} is divisible by p = {p}; the defect sum is undefined there")]
    ZeroResidue { q: i64, p: u64 },

    #[error("tangent weight {0} vanishes mod p = {1}")]
    ZeroWeight(i64, u64),

    #[error("c1^2 - 3*sign = {0} is odd; no integer Euler characteristic")]
    ParityViolation(i64),

    #[error("{0}")]
    OccurrenceViolation(String),

    #[error("expected exactly two rotation pairs, got {0}")]
    WrongPairCount(usize),

    #[error("the congruence form requires K.C = 0, got {0}")]
    NonzeroCanonicalPairing(i64),

    #[error("genus/singularity budget {0} is negative or odd")]
    InvalidBudget(i64),

    #[error("the oracle is limited to p <= {limit}, got p = {p}")]
    OracleRange { p: u64, limit: u64 },

    #[error("graph carries a tangency flag; this operation is defined for transverse configurations only")]
    TangencyFlagged,

    #[error("graph is not connected")]
    Disconnected,

    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
