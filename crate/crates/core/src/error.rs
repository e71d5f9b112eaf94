use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree {0} outside 1..=16")]
    DegreeOutOfRange(u32),
    #[error("field order {p}^{m} exceeds 2^24")]
    OrderTooLarge { p: u64, m: u32 },
    #[error("element index {index} outside a field of order {order}")]
    ElementOutOfRange { index: u64, order: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("F_{p}^{m} is not a quadratic extension")]
    NotQuadratic { p: u32, m: u32 },
    #[error("F_{order} has no subfield with {q} elements")]
    NoSubfield { order: u32, q: u64 },
    #[error("element is not in the subfield F_{q}")]
    NotInSubfield { q: u32 },
    #[error("zero has no norm preimages of the required shape")]
    ZeroNorm,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no roots to count")]
    ZeroPolynomial,
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("monomial exponents {exps:?} do not sum to degree {degree}")]
    BadMonomial { exps: [u32; 3], degree: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no valid parameters: {0}")]
    NoParameters(String),
    #[error("search space of {forms} forms exceeds the guard of {guard}")]
    SearchTooLarge { forms: u128, guard: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
