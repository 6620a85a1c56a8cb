//! Error type shared by the whole crate.

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (parsing, validation, bad arguments).
    #[error("input error: {0}")]
    Input(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("submatrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("scalar does not belong to the matrix domain")]
    DomainMismatch,

    #[error("unknown element {0}")]
    UnknownElement(u32),

    #[error("cannot contract a loop (column {0} is zero)")]
    ContractLoop(u32),

    #[error("column {0} is not a coloop")]
    NotColoop(u32),

    /// The flat spanned by the given generators has rank zero, so no vector
    /// on it can be moved into general position. Callers route this to loop
    /// elimination rather than treating it as fatal.
    #[error("degenerate flat: generators span only the zero vector")]
    DegenerateFlat,

    /// Retryable: an entry's denominator vanishes modulo the chosen prime.
    #[error("denominator of entry ({row},{col}) vanishes mod {modulus}")]
    DenominatorCollision {
        row: usize,
        col: usize,
        modulus: BigUint,
    },

    /// Retryable: rejection sampling found no prime in the interval.
    #[error("no prime found in [{lower},{upper}] after {attempts} draws")]
    NoPrimeFound {
        lower: BigUint,
        upper: BigUint,
        attempts: usize,
    },

    #[error("modular reduction still collides after {0} fresh primes")]
    BitControlExhausted(usize),

    /// A brute-force oracle was asked about an instance above its size limit.
    #[error("instance too large for brute-force check: {size} > limit {limit}")]
    OracleLimit { size: usize, limit: usize },

    /// A reduction step violated one of its exact postconditions; the
    /// message carries the trace context.
    #[error("reduction step failed: {0}")]
    StepFailed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors the caller may meaningfully retry with fresh randomness.
    pub fn is_retryable(&self) -> bool {
        matches!(
            self,
            Error::DenominatorCollision { .. } | Error::NoPrimeFound { .. }
        )
    }
}
