use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is outside [1, {ambient}]")]
    ElementOutOfRange { element: usize, ambient: usize },

    #[error("ambient size {0} exceeds the supported maximum of {max}", max = crate::combinatorics::MAX_AMBIENT)]
    AmbientTooLarge(usize),

    #[error("subsets live in different ambient sets: P_{0} vs P_{1}")]
    AmbientMismatch(usize, usize),

    #[error("anti-lexicographic comparison of a subset with itself")]
    EqualSubsets,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("n = {n} exceeds the cap of {cap} for {what}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("parameter x must be positive, got {0}")]
    NonPositiveParameter(String),

    #[error("Coxeter length {k} is outside [0, {max}]")]
    LengthOutOfRange { k: usize, max: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
