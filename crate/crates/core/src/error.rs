use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the cap {cap}")]
    PrimeTooLarge { p: u64, cap: u64 },
    #[error("field order overflows 128 bits")]
    FieldTooLarge,
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("modulus is not monic")]
    NotMonic,
    #[error("extension depth above the prime field would exceed {0}")]
    DepthExceeded(usize),
    #[error("operands live in different fields")]
    CtxMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field is not a subfield of the element's tower")]
    NotInTower,
    #[error("both arguments are zero")]
    BothZero,
    #[error("modulus polynomial is zero")]
    ZeroModulus,
    #[error("polynomial has degree < 1")]
    ConstantPolynomial,
    #[error("gcd(N_{n}, D_{n}) is not 1")]
    GcdNotOne { n: usize },
    #[error("iterate {n} has degree {degree}, above the cap {cap}")]
    IterationTooLarge { n: usize, degree: u128, cap: u128 },
    #[error("c_{n} = 0 in the criterion recurrence")]
    CZero { n: usize },
    #[error("X^p - X + xi is reducible (absolute trace of xi is zero)")]
    IrreducibilityHypothesisViolated,
    #[error("coefficient a must be nonzero")]
    AZero,
    #[error("field characteristic must be 2")]
    NotCharTwo,
    #[error("element does not generate the extension over the given subfield")]
    NotGenerating,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
