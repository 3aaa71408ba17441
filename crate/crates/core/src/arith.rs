//! Exact integer and rational primitives shared by every other module.
//!
//! Rationals are [`num_rational::BigRational`], which reduces to lowest terms
//! with a positive denominator on every construction.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Absolute value of the numerator of `x` in lowest terms.
pub fn num(x: &Rat) -> BigUint {
    x.numer().magnitude().clone()
}

/// Largest `e` with `p^e | n`.
pub fn valuation(n: &BigInt, p: &BigInt) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if p <= &BigInt::one() {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        n = q;
        e += 1;
    }
}

/// Returns the integer square root when `n` is a perfect square.
pub fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Square root of a rational that is the square of a rational.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    let n = is_square(x.numer())?;
    let d = is_square(x.denom())?;
    Some(Rat::new(n, d))
}

pub fn is_rat_square(x: &Rat) -> bool {
    rat_sqrt(x).is_some()
}

/// Whether `x^2 = a (mod m)` is solvable.
pub fn is_qr(a: &BigInt, m: u64) -> bool {
    if m <= 1 {
        return true;
    }
    let a = a.mod_floor(&BigInt::from(m)).to_u64().unwrap_or(0);
    factor(m)
        .iter()
        .all(|&(p, e)| is_qr_prime_power(a, p, e))
}

fn is_qr_prime_power(a: u64, p: u64, e: u32) -> bool {
    let pe = (p as u128).pow(e);
    let mut a = (a as u128) % pe;
    if a == 0 {
        return true;
    }
    let mut v = 0;
    while a.is_multiple_of(p as u128) {
        a /= p as u128;
        v += 1;
    }
    if v % 2 == 1 {
        return false;
    }
    let rem = e - v;
    // unit part must be a square modulo p^rem
    if p == 2 {
        match rem {
            0 | 1 => true,
            2 => a % 4 == 1,
            _ => a % 8 == 1,
        }
    } else {
        pow_mod(a as u64 % p, (p - 1) / 2, p) == 1
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin on arbitrary integers. Exact below 3.3e24 (first twelve prime
/// bases); a strong probable-prime test above that.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn iter(&self) -> impl Iterator<Item = &(u64, u32)> {
        self.factors.iter()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    pub fn as_slice(&self) -> &[(u64, u32)] {
        &self.factors
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn push_factor(out: &mut Vec<(u64, u32)>, p: u64) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    }
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut Vec<(u64, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        push_factor(out, n);
        return;
    }
    let d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Factor `n >= 1`; `factor(1)` is empty.
pub fn factor(n: u64) -> Factorization {
    let mut out = Vec::new();
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n.is_multiple_of(p) && n > 0 {
            push_factor(&mut out, p);
            n /= p;
        }
    }
    if n > 1 {
        factor_into(n, &mut out);
    }
    out.sort_unstable();
    Factorization { factors: out }
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (two.clone(), two.clone(), BigUint::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn factor_big_into(n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factor(small).factors {
            for _ in 0..e {
                push_big(out, BigUint::from(p));
            }
        }
        return;
    }
    if is_prime_big(&n) {
        push_big(out, n);
        return;
    }
    if let Some((root, k)) = perfect_power(&n) {
        let mut inner = Vec::new();
        factor_big_into(root, &mut inner);
        for (p, e) in inner {
            for _ in 0..e * k {
                push_big(out, p.clone());
            }
        }
        return;
    }
    let d = pollard_rho_big(&n);
    let q = &n / &d;
    factor_big_into(d, out);
    factor_big_into(q, out);
}

/// `n = root^k` with `k >= 2` maximal, if `n` is a perfect power. Rho is slow
/// on squares of large primes, so these are peeled off first.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    (2..=n.bits() as u32).rev().find_map(|k| {
        let root = n.nth_root(k);
        (num_traits::pow(root.clone(), k as usize) == *n && !root.is_one()).then_some((root, k))
    })
}

fn push_big(out: &mut Vec<(BigUint, u32)>, p: BigUint) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    }
}

/// Factor an arbitrary nonzero integer (sign ignored). Used for discriminants,
/// which routinely exceed 64 bits.
pub fn factor_big(n: &BigInt) -> Vec<(BigUint, u32)> {
    let mut n = n.magnitude().clone();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = 2u32;
    while p < 10_000 {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            push_big(&mut out, bp.clone());
            n /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    factor_big_into(n, &mut out);
    out.sort();
    out
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = alloc::vec![1u64];
    for &(p, e) in factor(n).as_slice() {
        let current = ds.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            ds.extend(current.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// When `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factor(n);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

#[cfg(test)]
pub(crate) fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub(crate) fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Integer square root (floor) of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    if n.sign() == Sign::Minus {
        BigInt::zero()
    } else {
        n.sqrt()
    }
}
