//! Necessary conditions on the level of an optimal elliptic curve with odd
//! congruence number (or odd modular degree).
//!
//! The square-free gates are evaluated from the cuspidal orders and the
//! Atkin-Lehner fixed-point data rather than from the congruence classes they
//! reduce to; the congruence forms are kept alongside as an independent check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use crate::arith::{factor, is_prime, num, Factorization, Rat};
use crate::atkin_lehner::{al_fixed_point_exists, ALElement};
use crate::cusp::{ogg_order, Sign, SquarefreeLevel};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateStatus {
    Pass,
    Fail,
}

impl GateStatus {
    pub fn is_pass(self) -> bool {
        self == GateStatus::Pass
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            GateStatus::Pass
        } else {
            GateStatus::Fail
        }
    }
}

impl fmt::Display for GateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateStatus::Pass => "pass",
            GateStatus::Fail => "fail",
        })
    }
}

/// One evaluated rule. `holds` says whether the rule admits the level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateReason {
    pub rule: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl fmt::Display for GateReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "violated" };
        write!(f, "{} [{}]: {}", self.rule, mark, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateVerdict {
    pub level: u64,
    pub status: GateStatus,
    pub reasons: Vec<GateReason>,
    /// Divisor orders examined along the way, keyed by a short description.
    pub orders: Vec<(String, BigUint)>,
}

impl GateVerdict {
    pub fn passes(&self) -> bool {
        self.status.is_pass()
    }
}

fn reason(rule: &'static str, holds: bool, detail: String) -> GateReason {
    GateReason { rule, holds, detail }
}

fn parity(n: &BigUint) -> &'static str {
    if n.is_odd() {
        "odd"
    } else {
        "even"
    }
}

fn odd_order(level: &SquarefreeLevel, signs: &[Sign]) -> BigUint {
    ogg_order(level, signs).expect("signs include a minus")
}

/// Gate for square-free levels.
pub fn gate_squarefree(n: u64) -> Result<GateVerdict> {
    let f = factor(n);
    if n < 2 {
        return Err(Error::LevelTooSmall(n));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(n));
    }
    let primes: Vec<u64> = f.primes().collect();
    let level = SquarefreeLevel::new(n)?;
    let mut reasons = Vec::new();
    let mut orders = Vec::new();

    let status = match primes.as_slice() {
        [p] => {
            reasons.push(reason("prime-level", true, format!("{p} is prime")));
            GateStatus::Pass
        }
        [2, p] => {
            // (1 - w_2)(1 +- w_p) P_1 must both have odd order, and w_2 must act
            // trivially, which is impossible when w_2 has a fixed point
            let plus = odd_order(&level, &[Sign::Minus, Sign::Plus]);
            let minus = odd_order(&level, &[Sign::Minus, Sign::Minus]);
            let w2_fixed = al_fixed_point_exists(&ALElement::new(&level, 2)?);
            orders.push((String::from("(1-w2)(1+wp)P1"), plus.clone()));
            orders.push((String::from("(1-w2)(1-wp)P1"), minus.clone()));
            let parity_ok = plus.is_odd() && minus.is_odd();
            reasons.push(reason(
                "2p-parity",
                parity_ok,
                format!("orders {plus} ({}) and {minus} ({})", parity(&plus), parity(&minus)),
            ));
            reasons.push(reason(
                "2p-w2-fixed-point",
                !w2_fixed,
                if w2_fixed {
                    format!("w_2 has a fixed point on X0({n}) (-2 is a square mod {p})")
                } else {
                    format!("w_2 has no fixed point on X0({n})")
                },
            ));
            GateStatus::from_bool(parity_ok && !w2_fixed)
        }
        [_, _] => {
            // some ordering must have w_q acting as -1 with (1 +- w_p)(1 - w_q) P_1 odd
            let mut any = false;
            for (i, j) in [(0usize, 1usize), (1, 0)] {
                let (a, b) = (primes[i], primes[j]);
                let mut s_plus = [Sign::Plus; 2];
                s_plus[j] = Sign::Minus;
                let mut s_minus = [Sign::Minus; 2];
                s_minus[j] = Sign::Minus;
                let o1 = odd_order(&level, &s_plus);
                let o2 = odd_order(&level, &s_minus);
                orders.push((format!("(1+w{a})(1-w{b})P1"), o1.clone()));
                orders.push((format!("(1-w{a})(1-w{b})P1"), o2.clone()));
                let ok = o1.is_odd() && o2.is_odd();
                any |= ok;
                reasons.push(reason(
                    "pq-parity",
                    ok,
                    format!("ordering ({a}, {b}): orders {o1} ({}) and {o2} ({})", parity(&o1), parity(&o2)),
                ));
            }
            GateStatus::from_bool(any)
        }
        _ => {
            reasons.push(reason(
                "at-most-two-primes",
                false,
                format!("{n} has {} prime factors", primes.len()),
            ));
            GateStatus::Fail
        }
    };
    Ok(GateVerdict { level: n, status, reasons, orders })
}

/// The congruence-class form of [`gate_squarefree`].
pub fn gate_squarefree_congruence(n: u64) -> Option<bool> {
    let f = factor(n);
    if n < 2 || !f.is_squarefree() {
        return None;
    }
    let primes: Vec<u64> = f.primes().collect();
    Some(match primes.as_slice() {
        [_] => true,
        [2, p] => matches!(p % 16, 5 | 7 | 13),
        [p, q] => {
            let fits = |a: u64, b: u64| matches!(a % 8, 3 | 5) && b % 4 == 3;
            fits(*p, *q) || fits(*q, *p)
        }
        _ => false,
    })
}

/// `num((p + a)(q + b) / 24)` for `(a, b)` in `(+,-), (-,+), (-,-)`.
pub fn pq_refined_orders(p: u64, q: u64) -> [BigUint; 3] {
    let o = |a: i64, b: i64| {
        let x = (BigInt::from(p) + a) * (BigInt::from(q) + b);
        num(&Rat::new(x, BigInt::from(24)))
    };
    [o(1, -1), o(-1, 1), o(-1, -1)]
}

/// Refined gate for `N = pq` with full rational 2-torsion: every `D^{ab}` odd.
pub fn gate_pq_refined(p: u64, q: u64) -> Result<GateVerdict> {
    if p == q || p.is_multiple_of(2) || q.is_multiple_of(2) || !is_prime(p) || !is_prime(q) {
        return Err(Error::Precondition("p and q must be distinct odd primes"));
    }
    if p * q <= 21 {
        return Err(Error::Precondition("the refined gate needs pq > 21"));
    }
    let orders = pq_refined_orders(p, q);
    let labels = ["D+-", "D-+", "D--"];
    let mut reasons = Vec::new();
    for (label, o) in labels.iter().zip(&orders) {
        reasons.push(reason("pq-refined-parity", o.is_odd(), format!("{label} has order {o} ({})", parity(o))));
    }
    let ok = orders.iter().all(|o| o.is_odd());
    Ok(GateVerdict {
        level: p * q,
        status: GateStatus::from_bool(ok),
        reasons,
        orders: labels.iter().map(|l| String::from(*l)).zip(orders).collect(),
    })
}

/// Conductors of the CM curves with odd modular degree, with their labels.
pub const CM_WHITELIST: [(u64, &str); 5] = [(27, "27A"), (32, "32A"), (36, "36A"), (49, "49A"), (243, "243B")];

pub fn whitelist_label(n: u64) -> Option<&'static str> {
    CM_WHITELIST.iter().find(|(c, _)| *c == n).map(|(_, l)| *l)
}

/// Shape of a non-square-free level admitted by the gate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelShape {
    PowerOfTwo(u32),
    OddPrimePower { p: u64, s: u32 },
    FourTimes { p: u64, s: u32 },
    EightTimes { p: u64, s: u32 },
}

impl fmt::Display for LevelShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelShape::PowerOfTwo(a) => write!(f, "2^{a}"),
            LevelShape::OddPrimePower { p, s } => write!(f, "{p}^{s}"),
            LevelShape::FourTimes { p, s } => write!(f, "4*{p}^{s}"),
            LevelShape::EightTimes { p, s } => write!(f, "8*{p}^{s}"),
        }
    }
}

pub fn level_shape(f: &Factorization) -> Option<LevelShape> {
    match f.as_slice() {
        [(2, a)] => Some(LevelShape::PowerOfTwo(*a)),
        [(p, s)] => Some(LevelShape::OddPrimePower { p: *p, s: *s }),
        [(2, 2), (p, s)] => Some(LevelShape::FourTimes { p: *p, s: *s }),
        [(2, 3), (p, s)] => Some(LevelShape::EightTimes { p: *p, s: *s }),
        _ => None,
    }
}

/// Gate for levels with a square factor.
pub fn gate_nonsemistable(n: u64) -> Result<GateVerdict> {
    if n < 2 {
        return Err(Error::LevelTooSmall(n));
    }
    let f = factor(n);
    if f.is_squarefree() {
        return Err(Error::SquarefreeLevel(n));
    }
    let shape = level_shape(&f);
    let mut reasons = vec![reason(
        "level-shape",
        shape.is_some(),
        match shape {
            Some(s) => format!("{n} = {s}"),
            None => format!("{n} = {f} is not 2^a, p^s, 4p^s or 8p^s"),
        },
    )];
    if let Some(label) = whitelist_label(n) {
        reasons.push(reason("cm-whitelist", true, format!("{n} is the conductor of {label}")));
    }
    Ok(GateVerdict {
        level: n,
        status: GateStatus::from_bool(shape.is_some()),
        reasons,
        orders: Vec::new(),
    })
}

/// Dispatches to the square-free or the non-square-free gate.
pub fn gate(n: u64) -> Result<GateVerdict> {
    if n >= 2 && factor(n).is_squarefree() {
        gate_squarefree(n)
    } else {
        gate_nonsemistable(n)
    }
}
