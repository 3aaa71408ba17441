//! Eta quotients `g_r = prod_{delta | N} eta(delta tau)^{r_delta}`: their divisors
//! on `X_0(N)` and the five-condition test for being a modular function.
//!
//! The vanishing order of `eta_M` at a cusp with denominator `d` is
//! `N gcd(d, M)^2 / (24 d gcd(d, N/d) M)`. For square-free `N` the cusp with
//! denominator `d` is `P_{N/d}`, so [`divisor_of_eta_quotient`] is the Fricke
//! relabelling of [`lambda_forward`](crate::cusp::lambda_forward).

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{divisors, factor, is_integral, Rat};
use crate::cusp::{CuspDivisor, EtaVector, SquarefreeLevel};
use crate::error::{Error, Result};

/// Exponents `r_delta` indexed by the positive divisors of any `N >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaExponents {
    n: u64,
    divisors: Vec<u64>,
    coeffs: Vec<Rat>,
}

impl EtaExponents {
    /// Exponents listed by increasing divisor of `n`.
    pub fn new(n: u64, coeffs: Vec<Rat>) -> Result<Self> {
        if n == 0 {
            return Err(Error::LevelTooSmall(0));
        }
        let divisors = divisors(n);
        if coeffs.len() != divisors.len() {
            return Err(Error::ExponentCount { expected: divisors.len(), got: coeffs.len() });
        }
        Ok(EtaExponents { n, divisors, coeffs })
    }

    pub fn from_ints(n: u64, coeffs: &[i64]) -> Result<Self> {
        Self::new(n, coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_eta_vector(v: &EtaVector) -> Self {
        let pairs = v.sorted_pairs();
        EtaExponents {
            n: v.level().n(),
            divisors: pairs.iter().map(|(d, _)| *d).collect(),
            coeffs: pairs.into_iter().map(|(_, c)| c).collect(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.divisors.iter().copied().zip(self.coeffs.iter())
    }

    pub fn to_eta_vector(&self) -> Result<EtaVector> {
        let level = SquarefreeLevel::new(self.n)?;
        EtaVector::from_pairs(&level, self.pairs().map(|(d, c)| (d, c.clone())))
    }

    fn weighted_sum<F: Fn(u64) -> u64>(&self, weight: F) -> Rat {
        self.pairs()
            .fold(Rat::zero(), |acc, (d, c)| acc + c * Rat::from_integer(BigInt::from(weight(d))))
    }
}

/// Vanishing order of `eta(M tau)` at the cusp of `X_0(N)` with denominator `d`.
pub fn eta_order_at_cusp(n: u64, m: u64, d: u64) -> Result<Rat> {
    for x in [m, d] {
        if x == 0 || !n.is_multiple_of(x) {
            return Err(Error::NotADivisor { divisor: x, level: n });
        }
    }
    let dp = d.gcd(&m) as u128;
    let t = d.gcd(&(n / d)) as u128;
    let numer = BigInt::from(n as u128 * dp * dp);
    let denom = BigInt::from(24u32) * BigInt::from(d as u128 * t * m as u128);
    Ok(Rat::new(numer, denom))
}

/// Divisor of `g_r` on `X_0(N)` for square-free `N`.
pub fn divisor_of_eta_quotient(r: &EtaExponents) -> Result<CuspDivisor> {
    let level = SquarefreeLevel::new(r.n)?;
    let n = r.n;
    let mut pairs = Vec::with_capacity(r.divisors.len());
    for &d in &r.divisors {
        let mut order = Rat::zero();
        for (delta, c) in r.pairs() {
            if !c.is_zero() {
                order += c * eta_order_at_cusp(n, delta, d)?;
            }
        }
        pairs.push((n / d, order));
    }
    CuspDivisor::from_pairs(&level, pairs)
}

/// The five conditions for `g_r` to be a modular function on `X_0(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LigozatCondition {
    /// every `r_delta` is an integer
    Integral = 1,
    /// `sum r_delta delta = 0 (mod 24)`
    LevelSum = 2,
    /// `sum r_delta N/delta = 0 (mod 24)`
    CoLevelSum = 3,
    /// `sum r_delta = 0`
    WeightZero = 4,
    /// `prod delta^{r_delta}` is a rational square
    SquareProduct = 5,
}

impl LigozatCondition {
    pub fn index(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LigozatVerdict {
    pub failed: Vec<LigozatCondition>,
}

impl LigozatVerdict {
    pub fn is_modular(&self) -> bool {
        self.failed.is_empty()
    }
}

impl fmt::Display for LigozatVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_modular() {
            return f.write_str("accept");
        }
        f.write_str("reject")?;
        for c in &self.failed {
            write!(f, " {}", c.index())?;
        }
        Ok(())
    }
}

fn divisible_by_24(x: &Rat) -> bool {
    is_integral(x) && x.numer().is_multiple_of(&BigInt::from(24))
}

/// Evaluates all five conditions and reports every one that fails. The square
/// condition is only meaningful for integral exponents and is skipped otherwise.
pub fn ligozat_check(r: &EtaExponents) -> LigozatVerdict {
    let mut failed = Vec::new();
    let integral = r.coeffs.iter().all(is_integral);
    if !integral {
        failed.push(LigozatCondition::Integral);
    }
    if !divisible_by_24(&r.weighted_sum(|d| d)) {
        failed.push(LigozatCondition::LevelSum);
    }
    if !divisible_by_24(&r.weighted_sum(|d| r.n / d)) {
        failed.push(LigozatCondition::CoLevelSum);
    }
    if !r.weighted_sum(|_| 1).is_zero() {
        failed.push(LigozatCondition::WeightZero);
    }
    if integral {
        let square = factor(r.n).primes().all(|p| {
            let exponent = r.pairs().fold(BigInt::zero(), |acc, (d, c)| {
                let mut v = 0u32;
                let mut d = d;
                while d % p == 0 {
                    d /= p;
                    v += 1;
                }
                acc + c.numer() * BigInt::from(v)
            });
            exponent.is_even()
        });
        if !square {
            failed.push(LigozatCondition::SquareProduct);
        }
    }
    LigozatVerdict { failed }
}

/// `eta_1^{24} eta_N^{-24}`, the standard degree-zero check function.
pub fn delta_quotient(n: u64) -> Result<EtaExponents> {
    let ds = divisors(n);
    let coeffs = ds
        .iter()
        .map(|&d| {
            if d == 1 && n != 1 {
                Rat::from_integer(BigInt::from(24))
            } else if d == n && n != 1 {
                Rat::from_integer(BigInt::from(-24))
            } else {
                Rat::zero()
            }
        })
        .collect();
    EtaExponents::new(n, coeffs)
}
