//! Campana points on orbifolds over Q.
//!
//! The crate decides membership of rational points on hyperplane orbifolds
//! (`check`), certifies local solubility or emptiness at a prime
//! (`solubility`), constructs rational points approximating prescribed local
//! points (`solvers`), and enumerates Campana points by height with residue
//! statistics (`enumerate`). Everything is exact: integer and rational
//! arithmetic throughout, no floating point in any verdict path.

pub mod check;
pub mod enumerate;
mod linalg;
pub mod orbifold;
pub mod padic;
pub mod solubility;
pub mod solvers;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not admissible here: {0}")]
    EvenPrime(&'static str),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("all coordinates are zero")]
    AllZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid orbifold: {0}")]
    InvalidOrbifold(String),
    #[error("forms are not in general linear position")]
    NotGeneralPosition,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("{0} is a perfect square")]
    SquareParameter(String),
    #[error("invalid congruence system: {0}")]
    InvalidCongruence(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("target is not locally Campana: {0}")]
    InfeasibleTarget(String),
    #[error("depth {depth} is below the largest finite multiplicity {need}")]
    DepthTooSmall { depth: u32, need: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("retry budget exhausted: {0}")]
    RetryBudget(String),
    #[error("search space too large: {0}")]
    SearchSpace(String),
    #[error("factorization failed: {0}")]
    Factorization(String),
    #[error("internal post-verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
