use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has all roots")]
    ZeroPolynomial,
    #[error("discriminant of a constant polynomial is undefined")]
    ConstantPolynomial,
    #[error("{0} is not defined for zero")]
    Zero(&'static str),
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("not on the surface x^2 + 3y^2 = 4z^3")]
    NotOnSurface,
    #[error("decomposition failed for ({0})")]
    DecompositionFailed(String),
    #[error("discriminant not a rational square")]
    NotSquare,
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("prime {0} is not of good reduction for this model")]
    BadPrime(u64),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
