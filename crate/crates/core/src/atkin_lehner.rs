//! Atkin-Lehner involutions on the cusps of `X_0(N)`, square-free `N`.
//!
//! On labels, `w_s(P_r) = P_{s r / gcd(s, r)^2}`; with cusps indexed by prime
//! bitmasks this is XOR of masks.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::arith::{is_qr, rat_int};
use crate::cusp::{CuspDivisor, Sign, SquarefreeLevel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ALElement {
    level: SquarefreeLevel,
    r: u64,
}

impl ALElement {
    pub fn new(level: &SquarefreeLevel, r: u64) -> Result<Self> {
        level.slot(r)?;
        Ok(ALElement { level: level.clone(), r })
    }

    pub fn identity(level: &SquarefreeLevel) -> Self {
        ALElement { level: level.clone(), r: 1 }
    }

    pub fn fricke(level: &SquarefreeLevel) -> Self {
        ALElement { level: level.clone(), r: level.n() }
    }

    pub fn level(&self) -> &SquarefreeLevel {
        &self.level
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let r = self.r;
        self.level.primes().iter().copied().filter(move |p| r.is_multiple_of(*p))
    }

    fn mask(&self) -> usize {
        self.level.slot(self.r).expect("r divides N")
    }

    /// Label of `w_r(P_c)`.
    pub fn act(&self, c: u64) -> Result<u64> {
        let m = self.level.slot(c)?;
        Ok(self.level.divisor_at(m ^ self.mask()))
    }

    /// `w_a w_b = w_{ab / gcd(a, b)^2}`.
    pub fn compose(&self, other: &ALElement) -> Result<ALElement> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level.n(), right: other.level.n() });
        }
        let r = self.level.divisor_at(self.mask() ^ other.mask());
        Ok(ALElement { level: self.level.clone(), r })
    }
}

impl fmt::Display for ALElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w_{} on X0({})", self.r, self.level.n())
    }
}

pub fn al_act_on_cusp(w: &ALElement, r: u64) -> Result<u64> {
    w.act(r)
}

/// `w_r` has a fixed point on `X_0(N)` iff `-p` is a square mod `N/r` for all `p | r`.
pub fn al_fixed_point_exists(w: &ALElement) -> bool {
    let m = w.level.n() / w.r;
    w.primes().all(|p| is_qr(&-BigInt::from(p), m))
}

/// Eigenvalues `epsilon_p` of `w_p`, one per prime of the level in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    level: SquarefreeLevel,
    signs: Vec<Sign>,
}

impl SignAssignment {
    pub fn new(level: &SquarefreeLevel, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != level.t() {
            return Err(Error::SignLength { expected: level.t(), got: signs.len() });
        }
        Ok(SignAssignment { level: level.clone(), signs })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, p: u64) -> Option<Sign> {
        let i = self.level.primes().iter().position(|&q| q == p)?;
        Some(self.signs[i])
    }

    /// Eigenvalue of `w_r`, the product of `epsilon_p` over `p | r`.
    pub fn eigenvalue(&self, w: &ALElement) -> Sign {
        self.level
            .primes()
            .iter()
            .zip(&self.signs)
            .filter(|(p, _)| w.r.is_multiple_of(**p))
            .fold(Sign::Plus, |acc, (_, &s)| acc * s)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, Sign)> + '_ {
        self.level.primes().iter().copied().zip(self.signs.iter().copied())
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, s)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}:{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Sign maps compatible with `w_N` acting as `-1`, with every `w_r` that has a
/// fixed point acting as `-1`, and (for `N = 2m`, `m` odd) `w_2` acting trivially.
pub fn admissible_sign_assignments(level: &SquarefreeLevel) -> Vec<SignAssignment> {
    let t = level.t();
    let forced: Vec<ALElement> = (1..level.num_cusps())
        .map(|m| ALElement { level: level.clone(), r: level.divisor_at(m) })
        .filter(al_fixed_point_exists)
        .collect();
    let two_trivial = level.primes().first() == Some(&2) && t > 1;

    (0..1usize << t)
        .map(|mask| {
            let signs = (0..t)
                .map(|i| if mask & (1 << i) != 0 { Sign::Minus } else { Sign::Plus })
                .collect();
            SignAssignment { level: level.clone(), signs }
        })
        .filter(|a| a.eigenvalue(&ALElement::fricke(level)) == Sign::Minus)
        .filter(|a| forced.iter().all(|w| a.eigenvalue(w) == Sign::Minus))
        .filter(|a| !two_trivial || a.signs[0] == Sign::Plus)
        .collect()
}

/// Expands `prod_k (1 + s_k w_{r_k}) P_1` into a divisor.
pub fn sign_divisor(level: &SquarefreeLevel, factors: &[(u64, Sign)]) -> Result<CuspDivisor> {
    let masks = factors
        .iter()
        .map(|&(r, s)| Ok((level.slot(r)?, s)))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = alloc::vec![0i64; level.num_cusps()];
    coeffs[0] = 1;
    for (m, s) in masks {
        let mut next = coeffs.clone();
        for (c, &v) in coeffs.iter().enumerate() {
            next[c ^ m] += s.value() * v;
        }
        coeffs = next;
    }
    CuspDivisor::from_slots(level, coeffs.into_iter().map(rat_int).collect())
}

/// `(1 - w_2)(1 + s w_p) P_1` on `X_0(2p)`.
pub fn two_p_divisor(p: u64, s: Sign) -> Result<CuspDivisor> {
    let level = SquarefreeLevel::new(2 * p)?;
    sign_divisor(&level, &[(2, Sign::Minus), (p, s)])
}
