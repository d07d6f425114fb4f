use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant map has no fibers")]
    ConstantMap,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {size} exceeds the ceiling {limit}")]
    CeilingExceeded { size: u128, limit: u64 },
    #[error("reduction modulo {0} is not allowed")]
    BadReduction(u64),
    #[error("a denominator vanishes modulo {0}")]
    DenominatorCollision(u64),
    #[error("3 is not a square in the field of size {0}")]
    NoSqrt3(u64),
    #[error("genus is not an integer: 2g-2 = {0}")]
    NonIntegralGenus(String),
    #[error("Hurwitz right-hand side {0} is odd")]
    HurwitzParity(i64),
    #[error("exceptional orbit did not close within {0} steps")]
    OrbitNotClosed(usize),
    #[error("wild ramification: characteristic {p} divides index {index}")]
    WildRamification { p: u64, index: u64 },
    #[error("no extension of degree <= {0} contains the ramification data")]
    ExtensionNotFound(u32),
    #[error("point counts are not consistent with any genus <= {0}")]
    InconsistentCounts(usize),
    #[error("splitting locus is empty")]
    EmptySplittingLocus,
    #[error("pole bound {m} too large for code length {len}")]
    PoleBoundTooLarge { m: usize, len: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("resultant vanishes identically")]
    DegenerateResultant,
    #[error("power series precision exhausted")]
    PrecisionExhausted,
    #[error("invalid tower specification: {0}")]
    InvalidSpec(String),
    #[error("unknown tower `{0}`")]
    UnknownTower(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::ConstantMap => "constant_map",
            Error::NotPrime(_) => "not_prime",
            Error::CeilingExceeded { .. } => "ceiling_exceeded",
            Error::BadReduction(_) => "bad_reduction",
            Error::DenominatorCollision(_) => "denominator_collision",
            Error::NoSqrt3(_) => "no_sqrt3",
            Error::NonIntegralGenus(_) => "non_integral_genus",
            Error::HurwitzParity(_) => "hurwitz_parity",
            Error::OrbitNotClosed(_) => "orbit_not_closed",
            Error::WildRamification { .. } => "wild_ramification",
            Error::ExtensionNotFound(_) => "extension_not_found",
            Error::InconsistentCounts(_) => "inconsistent_counts",
            Error::EmptySplittingLocus => "empty_splitting_locus",
            Error::PoleBoundTooLarge { .. } => "pole_bound_too_large",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::DegenerateResultant => "degenerate_resultant",
            Error::PrecisionExhausted => "precision_exhausted",
            Error::InvalidSpec(_) => "invalid_spec",
            Error::UnknownTower(_) => "unknown_tower",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
