use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} qubits vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("number of qubits {n} is outside the supported range 1..={max}")]
    QubitsOutOfRange { n: usize, max: usize },

    #[error("{operation} is capped at N <= {cap} (N = {n} requested; expected {predicted} results)")]
    Capacity {
        operation: &'static str,
        n: usize,
        cap: usize,
        predicted: String,
    },

    #[error("the zero vector is not a point of the polar space")]
    ZeroVector,

    #[error("the identity operator is not a point of the polar space")]
    IdentityOperator,

    #[error("invalid Pauli letter {ch:?} at position {position} (expected one of I, X, Y, Z)")]
    InvalidPauliLetter { ch: char, position: usize },

    #[error("empty Pauli word")]
    EmptyWord,

    #[error("subspace is not totally isotropic")]
    NotIsotropic,

    #[error("subspace is not a generator (rank {rank}, expected {expected} and totally isotropic)")]
    NotGenerator { rank: usize, expected: usize },

    #[error("field elements have different degrees ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("extension degree {n} is not supported (1..={max})")]
    DegreeOutOfRange { n: usize, max: usize },

    #[error("the given elements do not form a basis of GF(2^{n})")]
    NotABasis { n: usize },

    #[error("spread invariant violated: {0}")]
    InvalidSpread(String),

    #[error("limit must be at least 1")]
    ZeroLimit,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
