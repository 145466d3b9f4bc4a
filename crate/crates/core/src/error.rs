use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("polynomial is reducible over the rationals (factor {factor})")]
    Reducible { factor: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is zero")]
    ZeroElement,
    #[error("field is not totally real")]
    NotTotallyReal,
    #[error(
        "{q} divides the index [O_K : Z[theta]] for {poly}; supply a different defining polynomial"
    )]
    IndexDivisor { q: BigInt, poly: String },
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("no unit found within coordinate bound {0}")]
    SearchExhausted(u64),
    #[error("class number for degree {0} fields must be supplied by the user")]
    MissingUserClassNumber(usize),
    #[error("no generator found within coordinate bound {0}")]
    GeneratorNotFound(u64),
    #[error("S-unit basis unavailable: {0}")]
    BasisUnavailable(String),
    #[error("candidate limit {0} exceeded")]
    WorkExceeded(u64),
    #[error("element is a square in the base field")]
    IsSquare,
    #[error("triple does not satisfy the defining equation")]
    RelationViolated,
    #[error("inconsistent divisibility: {0}")]
    InconsistentDivisibility(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("degenerate lambda (0 or 1)")]
    DegenerateLambda,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
