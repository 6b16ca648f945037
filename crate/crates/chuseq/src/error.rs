use thiserror::Error;

/// Errors reported by checked constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument that must be positive was zero.
    #[error("argument must be positive")]
    Zero,

    /// Sequence lengths, moduli and unit groups need at least 2.
    #[error("length must be at least 2, got {0}")]
    LengthTooSmall(u64),

    #[error("root {root} out of range for length {n}: must satisfy 0 < root < n")]
    RootOutOfRange { root: u64, n: u64 },

    #[error("root not coprime: gcd({root}, {n}) != 1")]
    RootNotCoprime { root: u64, n: u64 },

    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(u64, u64),

    /// The squared correlation budget must lie in [N, N^2].
    #[error("budget {theta_sq} out of range [{n}, {n}^2] for length {n}")]
    BudgetOutOfRange { theta_sq: u64, n: u64 },

    /// Exhaustive subset search is intentionally capped; see `selection`.
    #[error("exhaustive search is capped at length {cap}, got {n}")]
    ExhaustiveCap { n: u64, cap: u64 },

    /// The shortcut count formulas only cover primes, prime powers and
    /// squarefree numbers.
    #[error("{0} is neither prime, a prime power, nor squarefree")]
    NotSpecialForm(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
