//! Cusps of `X_0(N)` for square-free `N`, the eta/cusp tensor isomorphism,
//! principality of cuspidal divisors and the structure of the cuspidal group.
//!
//! Cusps are labelled `P_r` for `r | N`, with `P_r` the class of `r/N`
//! (so `P_1` is the cusp at infinity). Vectors over cusps and over eta
//! exponents share one indexing: slot `mask` holds the divisor
//! `prod { p_i : bit i of mask is set }`, i.e. the tensor basis element
//! `f_{1,k_1} (x) ... (x) f_{t,k_t}` with `k_i` the i-th bit.
//!
//! The map `Lambda = (1/24) (x)_i [[p_i, 1], [1, p_i]]` sends eta exponents to
//! cusp divisors. A divisor `w` is principal iff `Lambda^{-1} w` is integral,
//! `w` has degree zero, and for every `i` the sum of `Lambda^{-1} w` over slots
//! divisible by `p_i` is even.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factor, is_integral, num, rat_int, Rat};
use crate::error::{Error, Result};
use crate::snf::{invariant_factors, normalize_cyclic};

/// Upper bound on the number of prime factors handled (lattice dimension `2^6`).
pub const MAX_PRIMES: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Square-free level `N > 1` with its ascending prime factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeLevel {
    n: u64,
    primes: Vec<u64>,
}

impl SquarefreeLevel {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::LevelTooSmall(n));
        }
        let f = factor(n);
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree(n));
        }
        if f.len() > MAX_PRIMES {
            return Err(Error::TooManyPrimes { level: n, primes: f.len() });
        }
        Ok(SquarefreeLevel { n, primes: f.primes().collect() })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of prime factors `t`.
    pub fn t(&self) -> usize {
        self.primes.len()
    }

    pub fn num_cusps(&self) -> usize {
        1 << self.t()
    }

    /// Tensor slot of the divisor `r | N`.
    pub fn slot(&self, r: u64) -> Result<usize> {
        if r == 0 || !self.n.is_multiple_of(r) {
            return Err(Error::NotADivisor { divisor: r, level: self.n });
        }
        Ok(self
            .primes
            .iter()
            .enumerate()
            .filter(|(_, &p)| r.is_multiple_of(p))
            .fold(0, |mask, (i, _)| mask | (1 << i)))
    }

    /// Divisor of `N` held in tensor slot `mask`.
    pub fn divisor_at(&self, mask: usize) -> u64 {
        self.primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .product()
    }

    /// Divisors of `N` in slot order.
    pub fn divisors(&self) -> Vec<u64> {
        (0..self.num_cusps()).map(|m| self.divisor_at(m)).collect()
    }

    /// Divisors of `N` in increasing order.
    pub fn sorted_divisors(&self) -> Vec<u64> {
        let mut ds = self.divisors();
        ds.sort_unstable();
        ds
    }

    fn check_same(&self, other: &SquarefreeLevel) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LevelMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

impl fmt::Display for SquarefreeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)
    }
}

macro_rules! tensor_vector {
    ($name:ident, $what:literal) => {
        #[doc = concat!("Rational vector over the ", $what, " of a square-free level, in slot order.")]
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            level: SquarefreeLevel,
            coeffs: Vec<Rat>,
        }

        impl $name {
            pub fn zero(level: &SquarefreeLevel) -> Self {
                $name { level: level.clone(), coeffs: vec![Rat::zero(); level.num_cusps()] }
            }

            /// Build from coefficients listed in slot order.
            pub fn from_slots(level: &SquarefreeLevel, coeffs: Vec<Rat>) -> Result<Self> {
                if coeffs.len() != level.num_cusps() {
                    return Err(Error::SignLength { expected: level.num_cusps(), got: coeffs.len() });
                }
                Ok($name { level: level.clone(), coeffs })
            }

            /// Build from `(divisor, coefficient)` pairs; unlisted divisors get 0
            /// and repeated divisors accumulate.
            pub fn from_pairs<I>(level: &SquarefreeLevel, pairs: I) -> Result<Self>
            where
                I: IntoIterator<Item = (u64, Rat)>,
            {
                let mut v = Self::zero(level);
                for (r, c) in pairs {
                    let s = level.slot(r)?;
                    v.coeffs[s] += c;
                }
                Ok(v)
            }

            /// Integer coefficients listed by increasing divisor.
            pub fn from_sorted_ints(level: &SquarefreeLevel, values: &[i64]) -> Result<Self> {
                let ds = level.sorted_divisors();
                if values.len() != ds.len() {
                    return Err(Error::SignLength { expected: ds.len(), got: values.len() });
                }
                Self::from_pairs(level, ds.into_iter().zip(values.iter().map(|&x| rat_int(x))))
            }

            pub fn level(&self) -> &SquarefreeLevel {
                &self.level
            }

            pub fn slots(&self) -> &[Rat] {
                &self.coeffs
            }

            pub fn get(&self, r: u64) -> Result<&Rat> {
                Ok(&self.coeffs[self.level.slot(r)?])
            }

            /// `(divisor, coefficient)` pairs by increasing divisor.
            pub fn sorted_pairs(&self) -> Vec<(u64, Rat)> {
                let mut out: Vec<(u64, Rat)> = (0..self.coeffs.len())
                    .map(|m| (self.level.divisor_at(m), self.coeffs[m].clone()))
                    .collect();
                out.sort_by_key(|(d, _)| *d);
                out
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Zero::is_zero)
            }

            pub fn is_integral(&self) -> bool {
                self.coeffs.iter().all(is_integral)
            }

            /// Sum of all coefficients.
            pub fn total(&self) -> Rat {
                self.coeffs.iter().fold(Rat::zero(), |acc, c| acc + c)
            }

            pub fn scale(&self, k: &Rat) -> Self {
                $name {
                    level: self.level.clone(),
                    coeffs: self.coeffs.iter().map(|c| c * k).collect(),
                }
            }

            pub fn try_add(&self, other: &Self) -> Result<Self> {
                self.level.check_same(&other.level)?;
                Ok($name {
                    level: self.level.clone(),
                    coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
                })
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                self.try_add(rhs).expect("vectors at different levels")
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                self.try_add(&-rhs).expect("vectors at different levels")
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name {
                    level: self.level.clone(),
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (d, c) in self.sorted_pairs() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        f.write_str(" + ")?;
                    }
                    first = false;
                    write!(f, "({c})[{d}]")?;
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
    };
}

tensor_vector!(CuspDivisor, "cusps `P_r`");
tensor_vector!(EtaVector, "eta exponents `r_delta`");

impl CuspDivisor {
    /// The single cusp `P_r`.
    pub fn cusp(level: &SquarefreeLevel, r: u64) -> Result<Self> {
        Self::from_pairs(level, [(r, Rat::one())])
    }

    pub fn degree(&self) -> Rat {
        self.total()
    }

    /// Integer coefficients, if integral.
    pub fn integer_slots(&self) -> Option<Vec<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.numer().clone()).collect())
    }

    /// Relabel `P_r -> P_{N/r}` (the Fricke involution on cusps).
    pub fn fricke(&self) -> CuspDivisor {
        let full = self.level.num_cusps() - 1;
        let coeffs = (0..self.coeffs.len()).map(|m| self.coeffs[full ^ m].clone()).collect();
        CuspDivisor { level: self.level.clone(), coeffs }
    }
}

/// Applies the same 2x2 map along every tensor axis.
fn apply_axiswise<F>(level: &SquarefreeLevel, input: &[Rat], f: F) -> Vec<Rat>
where
    F: Fn(&BigInt, &Rat, &Rat) -> (Rat, Rat),
{
    let mut v = input.to_vec();
    for (i, &p) in level.primes().iter().enumerate() {
        let p = BigInt::from(p);
        let bit = 1 << i;
        for lo in (0..v.len()).filter(|m| m & bit == 0) {
            let hi = lo | bit;
            let (y0, y1) = f(&p, &v[lo], &v[hi]);
            v[lo] = y0;
            v[hi] = y1;
        }
    }
    v
}

/// `Lambda(v) = (1/24) (x) [[p,1],[1,p]] v`.
pub fn lambda_forward(v: &EtaVector) -> CuspDivisor {
    let out = apply_axiswise(&v.level, &v.coeffs, |p, x0, x1| {
        let p = Rat::from_integer(p.clone());
        (&p * x0 + x1, x0 + &p * x1)
    });
    let scale = Rat::new(BigInt::one(), BigInt::from(24));
    CuspDivisor { level: v.level.clone(), coeffs: out.into_iter().map(|c| c * &scale).collect() }
}

/// `Lambda^{-1}(w) = 24 (x) [[p,1],[1,p]]^{-1} w`.
pub fn lambda_inverse(w: &CuspDivisor) -> EtaVector {
    let out = apply_axiswise(&w.level, &w.coeffs, |p, y0, y1| {
        let det = Rat::from_integer(p * p - 1);
        let p = Rat::from_integer(p.clone());
        ((&p * y0 - y1) / &det, (&p * y1 - y0) / det)
    });
    let scale = rat_int(24);
    EtaVector { level: w.level.clone(), coeffs: out.into_iter().map(|c| c * &scale).collect() }
}

/// Sum of the entries of `v` over slots divisible by the `i`-th prime.
fn prime_contraction(v: &[Rat], i: usize) -> Rat {
    v.iter()
        .enumerate()
        .filter(|(m, _)| m & (1 << i) != 0)
        .fold(Rat::zero(), |acc, (_, c)| acc + c)
}

fn is_even_integer(x: &Rat) -> bool {
    is_integral(x) && x.numer().is_even()
}

/// Whether the integral divisor `w` is linearly equivalent to zero on `X_0(N)`.
pub fn is_principal(w: &CuspDivisor) -> Result<bool> {
    if !w.is_integral() {
        return Err(Error::NonIntegralDivisor);
    }
    if !w.degree().is_zero() {
        return Ok(false);
    }
    let v = lambda_inverse(w);
    if !v.is_integral() {
        return Ok(false);
    }
    Ok((0..w.level.t()).all(|i| is_even_integer(&prime_contraction(&v.coeffs, i))))
}

/// Order of the class of the integral degree-zero divisor `w`.
pub fn divisor_order(w: &CuspDivisor) -> Result<BigUint> {
    if !w.is_integral() {
        return Err(Error::NonIntegralDivisor);
    }
    if !w.degree().is_zero() {
        return Err(Error::NonZeroDegree);
    }
    let v = lambda_inverse(w);
    let n0 = v.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<Rat> = v.coeffs.iter().map(|c| c * Rat::from_integer(n0.clone())).collect();
    let parity_ok = (0..w.level.t()).all(|i| is_even_integer(&prime_contraction(&scaled, i)));
    let order = if parity_ok { n0 } else { n0 * 2 };
    Ok(order.magnitude().clone())
}

/// `z = sum_{d | N} (prod_{p_k | d} b_k) P_d` for signs `b` aligned with the primes.
pub fn signed_cusp_sum(level: &SquarefreeLevel, signs: &[Sign]) -> Result<CuspDivisor> {
    if signs.len() != level.t() {
        return Err(Error::SignLength { expected: level.t(), got: signs.len() });
    }
    let coeffs = (0..level.num_cusps())
        .map(|m| {
            let s = signs
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .fold(Sign::Plus, |acc, (_, &b)| acc * b);
            rat_int(s.value())
        })
        .collect();
    Ok(CuspDivisor { level: level.clone(), coeffs })
}

/// Closed-form order of [`signed_cusp_sum`]: `num((p-1)/12)` at prime level,
/// `num(prod (p_k + b_k) / 24)` otherwise.
pub fn ogg_order(level: &SquarefreeLevel, signs: &[Sign]) -> Result<BigUint> {
    if signs.len() != level.t() {
        return Err(Error::SignLength { expected: level.t(), got: signs.len() });
    }
    if signs.iter().all(|&s| s == Sign::Plus) {
        return Err(Error::AllSignsPositive);
    }
    if level.t() == 1 {
        let p = BigInt::from(level.primes()[0]);
        return Ok(num(&Rat::new(p - 1, BigInt::from(12))));
    }
    let prod = level
        .primes()
        .iter()
        .zip(signs)
        .fold(BigInt::one(), |acc, (&p, s)| acc * (BigInt::from(p) + s.value()));
    Ok(num(&Rat::new(prod, BigInt::from(24))))
}

/// Invariant factors `d1 | d2 | ...` (all > 1) of the cuspidal subgroup
/// generated by the classes `P_r - P_1`.
///
/// With `B` the basis `P_r - P_1` of degree-zero integral divisors, the
/// principal ones are the `x` with `R x` integral, where `R` stacks
/// `Lambda^{-1} B` over the halved prime contractions of `Lambda^{-1} B`.
/// Writing `R = Q / c` with `c = prod (p^2 - 1)` and `Q = U S V` in Smith
/// form, the quotient is `sum Z / (c / gcd(c, s_i))`.
pub fn cuspidal_group_structure(level: &SquarefreeLevel) -> Vec<BigUint> {
    let (q, den) = principality_matrix(level);
    let diag = invariant_factors(&q);
    let cyclic: Vec<BigInt> = diag.iter().map(|s| &den / den.gcd(s)).collect();
    normalize_cyclic(&cyclic).into_iter().map(|d| d.magnitude().clone()).collect()
}

/// Integer matrix `Q` and denominator `c` such that the divisor
/// `sum_r x_r (P_r - P_1)` is principal iff `Q x = 0 (mod c)`.
pub fn principality_matrix(level: &SquarefreeLevel) -> (Vec<Vec<BigInt>>, BigInt) {
    let n = level.num_cusps();
    let t = level.t();
    let primes: Vec<BigInt> = level.primes().iter().map(|&p| BigInt::from(p)).collect();
    let den = primes.iter().fold(BigInt::one(), |acc, p| acc * (p * p - 1));
    // adjugate tensor entry (i, j)
    let adj = |i: usize, j: usize| -> BigInt {
        primes.iter().enumerate().fold(BigInt::one(), |acc, (k, p)| {
            if (i ^ j) & (1 << k) == 0 {
                acc * p
            } else {
                -acc
            }
        })
    };
    // column r-1 of Adj * B is Adj[:, r] - Adj[:, 0]
    let adj_b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (1..n).map(|r| adj(i, r) - adj(i, 0)).collect())
        .collect();
    let mut rows: Vec<Vec<BigInt>> =
        adj_b.iter().map(|row| row.iter().map(|x| x * 24).collect()).collect();
    for k in 0..t {
        let row: Vec<BigInt> = (0..n - 1)
            .map(|c| {
                let s = (0..n)
                    .filter(|i| i & (1 << k) != 0)
                    .fold(BigInt::zero(), |acc, i| acc + &adj_b[i][c]);
                s * 12
            })
            .collect();
        rows.push(row);
    }
    (rows, den)
}

/// Pushforward along the degeneracy map `X_0(N) -> X_0(N/2)` forgetting the
/// 2-part of the level structure: `P_r -> P_{odd part of r}`.
pub fn apply_2_old_projection(w: &CuspDivisor) -> Result<CuspDivisor> {
    let n = w.level.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddLevel(n));
    }
    let target = SquarefreeLevel::new(n / 2)?;
    let pairs = w.sorted_pairs().into_iter().map(|(r, c)| {
        let odd = if r % 2 == 0 { r / 2 } else { r };
        (odd, c)
    });
    CuspDivisor::from_pairs(&target, pairs)
}

/// All `2^t - 1` sign vectors with at least one `-1`, in a fixed order.
pub fn nontrivial_sign_vectors(t: usize) -> Vec<Vec<Sign>> {
    (1..(1usize << t))
        .map(|mask| {
            (0..t)
                .map(|i| if mask & (1 << i) != 0 { Sign::Minus } else { Sign::Plus })
                .collect()
        })
        .collect()
}

/// Same as [`is_principal`] but treating non-integral divisors as not principal.
pub fn is_principal_lenient(w: &CuspDivisor) -> bool {
    w.is_integral() && is_principal(w).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn level(n: u64) -> SquarefreeLevel {
        SquarefreeLevel::new(n).unwrap()
    }

    fn order(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn minimal_order(w: &CuspDivisor) -> u64 {
        (1..10_000)
            .find(|&k| is_principal(&w.scale(&rat_int(k as i64))).unwrap())
            .unwrap()
    }

    #[test]
    fn level_validation() {
        assert_eq!(SquarefreeLevel::new(12), Err(Error::NotSquarefree(12)));
        assert_eq!(SquarefreeLevel::new(1), Err(Error::LevelTooSmall(1)));
        assert!(matches!(
            SquarefreeLevel::new(2 * 3 * 5 * 7 * 11 * 13 * 17),
            Err(Error::TooManyPrimes { .. })
        ));
        let l = level(30);
        assert_eq!(l.primes(), &[2, 3, 5]);
        assert_eq!(l.slot(15).unwrap(), 0b110);
        assert_eq!(l.divisor_at(0b101), 10);
        assert!(l.slot(7).is_err());
    }

    #[test]
    fn lambda_prime_level() {
        let l = level(11);
        let e1 = EtaVector::from_pairs(&l, [(1, rat_int(1))]).unwrap();
        let w = lambda_forward(&e1);
        assert_eq!(w.get(1).unwrap(), &rat(11, 24));
        assert_eq!(w.get(11).unwrap(), &rat(1, 24));
        assert!(lambda_forward(&EtaVector::zero(&l)).is_zero());
    }

    #[test]
    fn lambda_fifteen_kronecker() {
        // e_{1,1} (x) e_{2,1}, i.e. eta_15, maps to (1/24)(f0 + 3 f1) (x) (f0 + 5 f1)
        let l = level(15);
        let v = EtaVector::from_pairs(&l, [(15, rat_int(1))]).unwrap();
        let w = lambda_forward(&v);
        assert_eq!(w.get(1).unwrap(), &rat(1, 24));
        assert_eq!(w.get(3).unwrap(), &rat(3, 24));
        assert_eq!(w.get(5).unwrap(), &rat(5, 24));
        assert_eq!(w.get(15).unwrap(), &rat(15, 24));
    }

    #[test]
    fn lambda_inverse_examples() {
        let l = level(11);
        let w = CuspDivisor::from_pairs(&l, [(11, rat_int(1)), (1, rat_int(-1))]).unwrap();
        let v = lambda_inverse(&w);
        // 24/120 * [[11,-1],[-1,11]] (-1, 1) = (12/5)(-1, 1)
        assert_eq!(v.get(1).unwrap(), &rat(-12, 5));
        assert_eq!(v.get(11).unwrap(), &rat(12, 5));

        // (f0 - f1) (x) (f0 - f1) at N = 15: 24/((3-1)(5-1)) (x) (-f0 + f1)
        let l = level(15);
        let w = signed_cusp_sum(&l, &[Sign::Minus, Sign::Minus]).unwrap();
        let v = lambda_inverse(&w);
        assert_eq!(v.get(1).unwrap(), &rat_int(3));
        assert_eq!(v.get(3).unwrap(), &rat_int(-3));
        assert_eq!(v.get(5).unwrap(), &rat_int(-3));
        assert_eq!(v.get(15).unwrap(), &rat_int(3));
        assert_eq!(lambda_forward(&v), w);
    }

    #[test]
    fn principal_examples() {
        let l = level(11);
        assert!(is_principal(&CuspDivisor::zero(&l)).unwrap());
        let z = CuspDivisor::from_pairs(&l, [(11, rat_int(1)), (1, rat_int(-1))]).unwrap();
        for k in 1..5 {
            assert!(!is_principal(&z.scale(&rat_int(k))).unwrap());
        }
        assert!(is_principal(&z.scale(&rat_int(5))).unwrap());

        let l = level(15);
        let z = signed_cusp_sum(&l, &[Sign::Plus, Sign::Minus]).unwrap();
        assert!(is_principal(&z.scale(&rat_int(2))).unwrap());
        assert!(!is_principal(&z).unwrap());

        assert!(!is_principal(&CuspDivisor::cusp(&l, 3).unwrap()).unwrap());
        let half = CuspDivisor::from_pairs(&l, [(3, rat(1, 2))]).unwrap();
        assert_eq!(is_principal(&half), Err(Error::NonIntegralDivisor));
    }

    #[test]
    fn order_examples() {
        let l = level(11);
        let z = CuspDivisor::from_pairs(&l, [(11, rat_int(1)), (1, rat_int(-1))]).unwrap();
        assert_eq!(divisor_order(&z).unwrap(), order(5));

        let l = level(15);
        let z = signed_cusp_sum(&l, &[Sign::Minus, Sign::Minus]).unwrap();
        assert_eq!(divisor_order(&z).unwrap(), order(1));

        let l = level(14);
        let z = signed_cusp_sum(&l, &[Sign::Plus, Sign::Minus]).unwrap();
        assert_eq!(z.get(2).unwrap(), &rat_int(1));
        assert_eq!(z.get(14).unwrap(), &rat_int(-1));
        assert_eq!(divisor_order(&z).unwrap(), order(3));

        assert_eq!(divisor_order(&CuspDivisor::zero(&l)).unwrap(), order(1));
        assert_eq!(
            divisor_order(&CuspDivisor::cusp(&l, 7).unwrap()),
            Err(Error::NonZeroDegree)
        );
    }

    #[test]
    fn ogg_examples() {
        assert_eq!(ogg_order(&level(11), &[Sign::Minus]).unwrap(), order(5));
        assert_eq!(ogg_order(&level(15), &[Sign::Plus, Sign::Minus]).unwrap(), order(2));
        assert_eq!(ogg_order(&level(14), &[Sign::Plus, Sign::Minus]).unwrap(), order(3));
        assert_eq!(
            ogg_order(&level(14), &[Sign::Plus, Sign::Plus]),
            Err(Error::AllSignsPositive)
        );
        assert!(matches!(
            ogg_order(&level(14), &[Sign::Plus]),
            Err(Error::SignLength { .. })
        ));
    }

    #[test]
    fn closed_form_matches_search_small_levels() {
        for n in [2u64, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21, 30, 42, 105] {
            let l = level(n);
            for signs in nontrivial_sign_vectors(l.t()) {
                let z = signed_cusp_sum(&l, &signs).unwrap();
                let searched = minimal_order(&z);
                assert_eq!(divisor_order(&z).unwrap(), order(searched), "N={n} {signs:?}");
                assert_eq!(ogg_order(&l, &signs).unwrap(), order(searched), "N={n} {signs:?}");
            }
        }
    }

    #[test]
    fn group_structure_known_levels() {
        let s = |n: u64| -> Vec<u64> {
            cuspidal_group_structure(&level(n))
                .iter()
                .map(|d| d.try_into().unwrap())
                .collect()
        };
        assert_eq!(s(11), vec![5]);
        assert_eq!(s(15), vec![2, 4]);
        // genus zero levels have trivial cuspidal group
        for n in [2, 3, 5, 6, 7, 10, 13] {
            assert!(s(n).is_empty(), "N={n}");
        }
        // J_0(14), J_0(17), J_0(19), J_0(21) are elliptic curves with rational
        // torsion Z/6, Z/4, Z/3, Z/2 x Z/4 generated by cusps
        assert_eq!(s(14), vec![6]);
        assert_eq!(s(17), vec![4]);
        assert_eq!(s(19), vec![3]);
        assert_eq!(s(21), vec![2, 4]);
    }

    #[test]
    fn two_old_projection() {
        let l = level(14);
        let w = CuspDivisor::from_sorted_ints(&l, &[1, -1, 1, -1]).unwrap();
        assert!(apply_2_old_projection(&w).unwrap().is_zero());
        let w = CuspDivisor::from_pairs(&l, [(1, rat_int(1)), (2, rat_int(1))]).unwrap();
        let pushed = apply_2_old_projection(&w).unwrap();
        assert_eq!(pushed.level().n(), 7);
        assert_eq!(pushed.get(1).unwrap(), &rat_int(2));
        assert_eq!(pushed.get(7).unwrap(), &rat_int(0));
        assert!(apply_2_old_projection(&CuspDivisor::zero(&l)).unwrap().is_zero());
        assert_eq!(
            apply_2_old_projection(&CuspDivisor::zero(&level(15))),
            Err(Error::OddLevel(15))
        );
    }

    #[test]
    fn fricke_swaps_labels() {
        let l = level(15);
        let w = CuspDivisor::cusp(&l, 3).unwrap().fricke();
        assert_eq!(w.get(5).unwrap(), &rat_int(1));
    }
}
