//! Exhaustive searches over the diophantine families that can carry odd
//! modular degree, with every constructed curve checked by Tate's algorithm.
//!
//! Each search has a `*_range` form over a sub-range of its outer parameter so
//! callers can split the work; concatenating consecutive ranges reproduces the
//! full search.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factor, is_prime, is_prime_big, is_square, prime_power};
use crate::curve::{two_torsion_structure, TwoTorsion, WeierstrassModel};
use crate::error::{Error, Result};
use crate::gates::{gate, GateStatus};
use crate::tate::{conductor_data, Kodaira};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    NeumannSetzer,
    TwoP,
    EightP,
    FourPq,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::NeumannSetzer => "neumann-setzer",
            Family::TwoP => "2p",
            Family::EightP => "8p",
            Family::FourPq => "4pq",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        [Family::NeumannSetzer, Family::TwoP, Family::EightP, Family::FourPq]
            .into_iter()
            .find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A constructed curve and what the verification found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelCheck {
    pub label: String,
    pub model: WeierstrassModel,
    pub conductor: BigUint,
    pub expected_conductor: Option<BigUint>,
    pub kodaira_at_2: Kodaira,
    pub f2: u32,
    pub two_torsion: TwoTorsion,
    pub gate: Option<GateStatus>,
}

impl ModelCheck {
    fn build(label: String, model: WeierstrassModel, expected: Option<BigUint>) -> Result<Self> {
        let data = conductor_data(&model)?;
        let (kodaira_at_2, f2) = match data.local_at(2) {
            Some(l) => (l.kodaira, l.f),
            None => (Kodaira::I0, 0),
        };
        let gate = data.conductor.to_u64().and_then(|n| gate(n).ok()).map(|v| v.status);
        Ok(ModelCheck {
            label,
            two_torsion: two_torsion_structure(&model),
            model,
            conductor: data.conductor,
            expected_conductor: expected,
            kodaira_at_2,
            f2,
            gate,
        })
    }

    /// True when no conductor was predicted or the prediction holds.
    pub fn conductor_as_expected(&self) -> bool {
        self.expected_conductor.as_ref().is_none_or(|c| *c == self.conductor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub family: Family,
    pub params: Vec<(&'static str, BigInt)>,
    pub models: Vec<ModelCheck>,
    pub notes: Vec<String>,
}

impl SearchHit {
    pub fn param(&self, name: &str) -> Option<&BigInt> {
        self.params.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn param_u64(&self, name: &str) -> Option<u64> {
        self.param(name).and_then(|v| v.to_u64())
    }
}

fn int(n: impl Into<BigInt>) -> BigInt {
    n.into()
}

fn model(a: [BigInt; 5]) -> WeierstrassModel {
    let [a1, a2, a3, a4, a6] = a;
    WeierstrassModel { a1, a2, a3, a4, a6 }
}

fn signed(a: &BigInt) -> String {
    if a.is_negative() {
        format!("- {}", a.abs())
    } else {
        format!("+ {a}")
    }
}

/// The sign `+-m` that is `1 (mod 4)`. For odd `m`, `y^2 = x(x^2 + m x + c)` and
/// its quadratic twist by `-1` differ at 2, and only this choice keeps `v_2(N)`
/// minimal.
fn one_mod_four(m: &BigInt) -> BigInt {
    if m.mod_floor(&int(4)) == int(1) {
        m.clone()
    } else {
        -m
    }
}

/// `p = m^2 + 4` prime for odd `m`, with `y^2 = x(x^2 + a x - 1)`, `a = +-m = 1 (mod 4)`.
pub fn search_neumann_setzer(m_max: u64) -> Result<Vec<SearchHit>> {
    search_neumann_setzer_range(1..=m_max)
}

pub fn search_neumann_setzer_range(ms: RangeInclusive<u64>) -> Result<Vec<SearchHit>> {
    let mut hits = Vec::new();
    for m in ms.filter(|m| m % 2 == 1) {
        let p = BigUint::from(m) * m + 4u32;
        if !is_prime_big(&p) {
            continue;
        }
        let a = one_mod_four(&int(m));
        let e = model([int(0), a.clone(), int(0), int(-1), int(0)]);
        let check = ModelCheck::build(format!("y^2 = x(x^2 {} x - 1)", signed(&a)), e, Some(&p * 4u32))?;
        hits.push(SearchHit {
            family: Family::NeumannSetzer,
            params: vec![("m", int(m)), ("p", BigInt::from(p))],
            models: vec![check],
            notes: Vec::new(),
        });
    }
    Ok(hits)
}

/// Upper end of the window `7 <= k < f(p)`, decided exactly:
/// `k < 18 + 2 log2 p` iff `2^k < 2^18 p^2`, and `k < 435 + 10 log2 p` iff `2^k < 2^435 p^10`.
pub fn ivorra_window_contains(k: u32, p: &BigUint) -> bool {
    if k < 7 {
        return false;
    }
    let two_k = BigUint::one() << k;
    if p.bits() <= 96 && *p < (BigUint::one() << 96u32) {
        two_k < (BigUint::one() << 18u32) * p * p
    } else {
        two_k < (BigUint::one() << 435u32) * num_traits::pow(p.clone(), 10)
    }
}

/// `p = 2^k - m^2` prime with `p = 7 (mod 16)`, for `3 <= k <= k_max`.
pub fn search_2p_family(k_max: u32) -> Result<Vec<SearchHit>> {
    if k_max < 3 {
        return Err(Error::Precondition("k_max must be at least 3"));
    }
    search_2p_family_range(3..=k_max)
}

pub fn search_2p_family_range(ks: RangeInclusive<u32>) -> Result<Vec<SearchHit>> {
    let mut hits = Vec::new();
    for k in ks {
        if k < 3 {
            continue;
        }
        let two_k = BigInt::one() << k;
        let mut m = BigInt::one();
        while &m * &m < two_k {
            let p = &two_k - &m * &m;
            let p_u = p.magnitude().clone();
            if (&p % 16u32) == BigInt::from(7) && is_prime_big(&p_u) {
                hits.push(two_p_hit(k, &m, &p_u)?);
            }
            m += 2;
        }
    }
    Ok(hits)
}

fn two_p_hit(k: u32, m: &BigInt, p: &BigUint) -> Result<SearchHit> {
    let mut notes = Vec::new();
    let mut models = Vec::new();
    if *p < BigUint::from(29u32) {
        notes.push(String::from("p < 29: outside the range of the window bound"));
    } else if !ivorra_window_contains(k, p) {
        notes.push(String::from("k outside the window 7 <= k < f(p)"));
    }
    if k >= 7 {
        // replacing m by -m changes nothing in p; pick the sign with m = 1 (mod 4)
        let signed_m = if (m % 4u32) == BigInt::one() { m.clone() } else { -m.clone() };
        let a2 = (&signed_m - 1) / 4;
        let a4 = BigInt::one() << (k - 6);
        let e = model([int(1), a2, int(0), a4, int(0)]);
        let expect = BigUint::from(2u32) * p;
        models.push(ModelCheck::build(
            format!("y^2 + xy = x^3 + ({signed_m} - 1)/4 x^2 + 2^{} x", k - 6),
            e,
            Some(expect),
        )?);
    } else {
        notes.push(String::from("k < 7: the family model is not integral of conductor 2p"));
    }
    Ok(SearchHit {
        family: Family::TwoP,
        params: vec![("k", int(k)), ("m", m.clone()), ("p", BigInt::from(p.clone()))],
        models,
        notes,
    })
}

/// Primes `31 < p <= p_max` with `p - 16`, `p - 32` or `p + 32` a square.
pub fn search_8p_family(p_max: u64) -> Result<Vec<SearchHit>> {
    if p_max < 37 {
        return Err(Error::Precondition("p_max must be at least 37"));
    }
    search_8p_family_range(32..=p_max)
}

pub fn search_8p_family_range(ps: RangeInclusive<u64>) -> Result<Vec<SearchHit>> {
    let mut hits = Vec::new();
    let cases: [(&str, i64, i64); 3] = [("p-16", -16, -4), ("p-32", -32, -8), ("p+32", 32, 8)];
    for p in ps.filter(|&p| p > 31 && is_prime(p)) {
        for (case, shift, a4) in cases {
            let Some(m) = is_square(&(int(p) + shift)) else {
                continue;
            };
            let a = one_mod_four(&m);
            let e = model([int(0), a.clone(), int(0), int(a4), int(0)]);
            let check = ModelCheck::build(
                format!("y^2 = x^3 {} x^2 {} x", signed(&a), signed(&int(a4))),
                e,
                Some(BigUint::from(8 * p)),
            )?;
            hits.push(SearchHit {
                family: Family::EightP,
                params: vec![("p", int(p)), ("m", m)],
                models: vec![check],
                notes: vec![format!("{case} is a square")],
            });
        }
    }
    Ok(hits)
}

/// Odd prime powers `P < Q <= bound` of distinct primes with `Q - P = difference`
/// (8, or 4 for exploration), each with both models `y^2 = x(x - sP)(x - sQ)`.
pub fn search_4pq_family(bound: u64, difference: u64) -> Result<Vec<SearchHit>> {
    if bound < 11 {
        return Err(Error::Precondition("bound must be at least 11"));
    }
    search_4pq_family_range(3..=bound, bound, difference)
}

pub fn search_4pq_family_range(
    lower: RangeInclusive<u64>,
    bound: u64,
    difference: u64,
) -> Result<Vec<SearchHit>> {
    if difference != 8 && difference != 4 {
        return Err(Error::Precondition("difference must be 8 or 4"));
    }
    let mut hits = Vec::new();
    for small in lower.filter(|n| n % 2 == 1) {
        let large = small + difference;
        if large > bound {
            break;
        }
        let (Some((p, alpha)), Some((q, beta))) = (prime_power(small), prime_power(large)) else {
            continue;
        };
        if p == q {
            continue;
        }
        let mut models = Vec::new();
        for s in [1i64, -1] {
            let (sp, sq) = (int(s) * small, int(s) * large);
            let e = model([int(0), -(&sp + &sq), int(0), &sp * &sq, int(0)]);
            models.push(ModelCheck::build(
                format!("y^2 = x(x {} {small})(x {} {large})", if s > 0 { '-' } else { '+' }, if s > 0 { '-' } else { '+' }),
                e,
                None,
            )?);
        }
        hits.push(SearchHit {
            family: Family::FourPq,
            params: vec![
                ("p", int(p)),
                ("alpha", int(alpha)),
                ("q", int(q)),
                ("beta", int(beta)),
                ("p^alpha", int(small)),
                ("q^beta", int(large)),
            ],
            models,
            notes: Vec::new(),
        });
    }
    Ok(hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Z2Z4Case {
    /// `a4 = 1`
    Unit,
    /// `a4` a power of a single prime
    PrimePower,
    /// `a4` divisible by both primes
    TwoPrimes,
}

impl fmt::Display for Z2Z4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Z2Z4Case::Unit => "a4 = 1",
            Z2Z4Case::PrimePower => "a4 = p^r",
            Z2Z4Case::TwoPrimes => "a4 = p^r q^s",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Z4Solution {
    pub case: Z2Z4Case,
    pub model: WeierstrassModel,
    pub conductor: BigUint,
    pub two_torsion: TwoTorsion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Z4Report {
    pub bound: u64,
    pub solutions: Vec<Z2Z4Solution>,
    /// Number of candidate factorizations examined per case.
    pub examined: Vec<(Z2Z4Case, usize)>,
}

impl Z2Z4Report {
    pub fn conductors(&self) -> Vec<BigUint> {
        let mut cs: Vec<BigUint> = self.solutions.iter().map(|s| s.conductor.clone()).collect();
        cs.sort();
        cs.dedup();
        cs
    }
}

/// Solves the constraint equations for `y^2 + xy = x^3 + a2 x^2 + a4 x` with a
/// point of order 4 above `(0, 0)` (so `a4 = c^2`) and `Delta = a4^2 ((4 a2 + 1)^2 - 64 a4)`
/// supported on two odd primes, keeping conductors `pq <= bound`.
pub fn verify_z2z4_classification(bound: u64) -> Result<Z2Z4Report> {
    if bound < 21 {
        return Err(Error::Precondition("bound must be at least 21"));
    }
    let mut candidates: Vec<(Z2Z4Case, BigInt, BigInt)> = Vec::new();
    let mut examined = Vec::new();

    // a4 = 1: (A - m)(A + m) = 64 with A = 4 a2 + 1 odd
    let mut count = 0;
    for d in [1i64, 2, 4, 8, 16, 32, 64] {
        for sign in [1i64, -1] {
            count += 1;
            let (lo, hi) = (sign * d, sign * (64 / d));
            if (lo + hi) % 2 != 0 {
                continue;
            }
            let a = (lo + hi) / 2;
            let m = (hi - lo) / 2;
            if m == 0 || (a - 1).rem_euclid(4) != 0 {
                continue;
            }
            candidates.push((Z2Z4Case::Unit, int((a - 1) / 4), int(1)));
        }
    }
    examined.push((Z2Z4Case::Unit, count));

    // a4 = c^2 with c a power of one prime: the coprime factors of
    // (A - 8c)(A + 8c) = Q^2 are 1 and Q^2 (up to sign), so Q^2 - 1 = 16c. As
    // gcd(Q - 1, Q + 1) = 2 and c is a prime power, Q - 1 or Q + 1 is 2 or 8.
    let mut count = 0;
    for q in [3i64, 9, 1, 7] {
        count += 1;
        if q < 3 || (q * q - 1) % 16 != 0 {
            continue;
        }
        let c = (q * q - 1) / 16;
        let (Some((cp, _)), Some((qp, _))) = (prime_power(c as u64), prime_power(q as u64)) else {
            continue;
        };
        if cp == qp || cp == 2 {
            continue;
        }
        for a in [(q * q + 1) / 2, -(q * q + 1) / 2] {
            if (a - 1).rem_euclid(4) == 0 {
                candidates.push((Z2Z4Case::PrimePower, int((a - 1) / 4), int(c * c)));
            }
        }
    }
    examined.push((Z2Z4Case::PrimePower, count));

    // a4 = c^2 divisible by both primes: (A - 8c)(A + 8c) = 1 needs c = 0
    let mut count = 0;
    for (lo, hi) in [(1i64, 1i64), (-1, -1)] {
        count += 1;
        let c16 = hi - lo;
        if c16 > 0 && c16 % 16 == 0 {
            let c = c16 / 16;
            let a = (lo + hi) / 2;
            if (a - 1).rem_euclid(4) == 0 {
                candidates.push((Z2Z4Case::TwoPrimes, int((a - 1) / 4), int(c * c)));
            }
        }
    }
    examined.push((Z2Z4Case::TwoPrimes, count));

    let mut solutions = Vec::new();
    for (case, a2, a4) in candidates {
        let e = model([int(1), a2, int(0), a4, int(0)]);
        if e.is_singular() {
            continue;
        }
        let conductor = conductor_data(&e)?.conductor;
        let Some(n) = conductor.to_u64() else {
            continue;
        };
        let f = factor(n);
        if n > bound || f.len() != 2 || !f.is_squarefree() {
            continue;
        }
        solutions.push(Z2Z4Solution { case, two_torsion: two_torsion_structure(&e), model: e, conductor });
    }
    solutions.sort_by(|a, b| a.conductor.cmp(&b.conductor).then(a.model.a2.cmp(&b.model.a2)));
    solutions.dedup();
    Ok(Z2Z4Report { bound, solutions, examined })
}

/// Exact rational 8-torsion check helper: whether `x = c` with `c^2 = a4`
/// lifts to a rational point of order 4.
pub fn has_order_four_point(e: &WeierstrassModel) -> bool {
    let re = e.to_rational();
    let Some(c) = is_square(&e.a4) else {
        return false;
    };
    [c.clone(), -c].iter().any(|x| {
        let x = crate::arith::Rat::from_integer(x.clone());
        re.lift_x(&x).is_some_and(|p| re.order(&p, 4) == Some(4))
    }) && !e.a4.is_zero()
        && !e.a4.is_negative()
}
