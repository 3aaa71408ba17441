use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroValuation,
    NotPrime(String),
    NotSquarefree(u64),
    LevelTooSmall(u64),
    TooManyPrimes { level: u64, primes: usize },
    NotADivisor { divisor: u64, level: u64 },
    LevelMismatch { left: u64, right: u64 },
    NonIntegralDivisor,
    NonZeroDegree,
    SignLength { expected: usize, got: usize },
    ExponentCount { expected: usize, got: usize },
    AllSignsPositive,
    OddLevel(u64),
    Singular,
    ZeroScale,
    TwoTorsionDuplication,
    PointNotOnCurve,
    BadReductionAtTwo,
    NonIntegralModel,
    SquarefreeLevel(u64),
    Precondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroValuation => f.write_str("valuation of zero is undefined"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotSquarefree(n) => write!(f, "level {n} is not square-free"),
            Error::LevelTooSmall(n) => write!(f, "level {n} must be greater than 1"),
            Error::TooManyPrimes { level, primes } => {
                write!(f, "level {level} has {primes} prime factors; at most 6 are supported")
            }
            Error::NotADivisor { divisor, level } => {
                write!(f, "{divisor} does not divide the level {level}")
            }
            Error::LevelMismatch { left, right } => {
                write!(f, "level mismatch: {left} vs {right}")
            }
            Error::NonIntegralDivisor => f.write_str("divisor has non-integral coefficients"),
            Error::NonZeroDegree => f.write_str("divisor does not have degree zero"),
            Error::SignLength { expected, got } => {
                write!(f, "expected {expected} signs, got {got}")
            }
            Error::ExponentCount { expected, got } => {
                write!(f, "expected {expected} exponents (one per divisor), got {got}")
            }
            Error::AllSignsPositive => f.write_str("at least one sign must be -1"),
            Error::OddLevel(n) => write!(f, "level {n} is odd; the 2-old projection needs an even level"),
            Error::Singular => f.write_str("Weierstrass model is singular (discriminant 0)"),
            Error::ZeroScale => f.write_str("transform scale u must be nonzero"),
            Error::TwoTorsionDuplication => {
                f.write_str("point is 2-torsion: duplication denominator vanishes")
            }
            Error::PointNotOnCurve => f.write_str("point is not on the curve"),
            Error::BadReductionAtTwo => f.write_str("curve has bad reduction at 2"),
            Error::NonIntegralModel => f.write_str("model coefficients are not integral"),
            Error::SquarefreeLevel(n) => {
                write!(f, "level {n} is square-free; use the square-free gate")
            }
            Error::Precondition(msg) => f.write_str(msg),
        }
    }
}
