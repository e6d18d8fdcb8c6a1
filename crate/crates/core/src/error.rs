use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term is not a unit")]
    NotInvertible,

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("singular Pochhammer factor: {0}")]
    SingularPochhammer(String),

    #[error("coefficient index {index} beyond truncation order {order}")]
    OutOfRange { index: i64, order: i64 },

    #[error("fractional offsets do not cancel: {0}")]
    LatticeMismatch(String),

    #[error("size {n} exceeds the enumeration guard {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("bilateral sum does not converge formally: {0}")]
    DivergentSpec(String),

    #[error("pole factor vanishes identically at n = {0}")]
    SingularPole(i64),

    #[error("unsupported specialization: {0}")]
    UnsupportedSpecialization(String),

    #[error("theta denominator vanishes")]
    ThetaZero,

    #[error("term bound violated: claimed q^{claimed}, found q^{found}")]
    BoundViolation { claimed: i64, found: i64 },

    #[error("unknown series key `{0}`")]
    UnknownSeries(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("not a Bailey pair: defining relation fails at n = {0}")]
    NotBaileyPair(usize),

    #[error("only {found} usable specializations, need {needed}")]
    TooFewSpecializations { found: usize, needed: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("factorization rejected: {0}")]
    Factorization(String),

    #[error("guard exceeded: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
