use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series has a zero constant term")]
    PoleAtOrigin,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("polynomial of {family} index {n} does not have the expected power pattern")]
    NotReducible { family: String, n: usize },

    #[error("non-terminating series with |z| >= 1")]
    NonTerminating,

    #[error("lower parameter {index} hits a pole at term {k}")]
    LowerParameterPole { index: usize, k: usize },

    #[error("series did not converge within {0} terms")]
    TermCapReached(usize),

    #[error("gamma function pole at {0}")]
    GammaPole(f64),

    #[error("point {0} is within pole-proximity radius of a singularity")]
    PoleProximity(f64),

    #[error("argument {0} lies outside the supported domain")]
    DomainExceeded(f64),

    #[error("table holds {have} entries but index {need} was requested")]
    InsufficientTable { have: usize, need: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("certificate denominator vanishes at n={n}, k={k}")]
    CertificateDenominator { n: String, k: i64 },

    #[error("recurrence violated at index {0}")]
    RecurrenceViolation(usize),

    #[error("cannot parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
