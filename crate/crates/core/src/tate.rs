//! Tate's algorithm: Kodaira symbol, conductor exponent and Tamagawa number at
//! a prime, looping through `u = p` rescalings until the model is minimal.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factor_big, is_prime_big, Rat};
use crate::curve::{Curve, Transform, WeierstrassModel};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    I0,
    I(u32),
    II,
    III,
    IV,
    I0Star,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    /// Number of irreducible components of the special fibre.
    pub fn components(self) -> u32 {
        match self {
            Kodaira::I0 | Kodaira::II => 1,
            Kodaira::I(n) => n,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::IStar(n) => n + 5,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    /// `n` for `I_n` and `I_n*`.
    pub fn n(self) -> Option<u32> {
        match self {
            Kodaira::I(n) | Kodaira::IStar(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => f.write_str("I0"),
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => f.write_str("II"),
            Kodaira::III => f.write_str("III"),
            Kodaira::IV => f.write_str("IV"),
            Kodaira::I0Star => f.write_str("I0*"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => f.write_str("IV*"),
            Kodaira::IIIStar => f.write_str("III*"),
            Kodaira::IIStar => f.write_str("II*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateResult {
    pub p: BigUint,
    pub kodaira: Kodaira,
    /// Conductor exponent.
    pub f: u32,
    /// Tamagawa number.
    pub c: u32,
    /// Whether the input model was already minimal at `p`.
    pub minimal: bool,
    /// Valuation of the minimal discriminant.
    pub val_disc: u32,
    /// Model minimal at `p` reached by the algorithm.
    pub model: WeierstrassModel,
    /// Change of coordinates from the input model to `model`.
    pub transform: Transform,
}

impl TateResult {
    /// Ogg's formula `f = v(Delta_min) - m + 1`.
    pub fn satisfies_ogg(&self) -> bool {
        self.f + self.kodaira.components() == self.val_disc + 1
    }
}

fn val(n: &BigInt, p: &BigInt) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn divides(p: &BigInt, n: &BigInt) -> bool {
    n.is_multiple_of(p)
}

fn modp(n: &BigInt, p: &BigInt) -> BigInt {
    n.mod_floor(p)
}

fn inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let g = a.mod_floor(p).extended_gcd(p);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(p)
}

/// Integral model after `x = x' + r, y = y' + s x' + t`.
fn shift(e: &WeierstrassModel, r: &BigInt, s: &BigInt, t: &BigInt) -> WeierstrassModel {
    let Curve { a1, a2, a3, a4, a6 } = e;
    Curve {
        a1: a1 + 2 * s,
        a2: a2 - s * a1 + 3 * r - s * s,
        a3: a3 + r * a1 + 2 * t,
        a4: a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6: a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
    }
}

fn pow(p: &BigInt, k: u32) -> BigInt {
    num_traits::pow(p.clone(), k as usize)
}

/// Whether `a T^2 + b T + c` has a root mod `p`.
fn quadratic_has_root(a: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> bool {
    let (a, b, c) = (modp(a, p), modp(b, p), modp(c, p));
    if a.is_zero() {
        return !b.is_zero() || c.is_zero();
    }
    if *p == BigInt::from(2) {
        // T = 0 or T = 1
        return c.is_zero() || modp(&(&a + &b + &c), p).is_zero();
    }
    is_square_mod(&(&b * &b - 4 * &a * &c), p)
}

fn is_square_mod(a: &BigInt, p: &BigInt) -> bool {
    let a = modp(a, p);
    if a.is_zero() {
        return true;
    }
    let e = (p - 1u32) / 2u32;
    a.modpow(&e, p).is_one()
}

/// Polynomials over `F_p`, coefficients from the constant term up.
fn poly_trim(mut f: Vec<BigInt>) -> Vec<BigInt> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn poly_rem(f: &[BigInt], g: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = f.iter().map(|c| modp(c, p)).collect();
    let lead_inv = inverse(g.last().expect("nonzero divisor"), p);
    let dg = g.len() - 1;
    while r.len() > dg {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let q = modp(&(top * &lead_inv), p);
        let shift = r.len() - dg;
        for (i, gi) in g[..dg].iter().enumerate() {
            r[shift + i] = modp(&(&r[shift + i] - &q * gi), p);
        }
    }
    poly_trim(r)
}

fn poly_mulmod(a: &[BigInt], b: &[BigInt], m: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_gcd_degree(f: Vec<BigInt>, g: Vec<BigInt>, p: &BigInt) -> usize {
    let (mut a, mut b) = (poly_trim(f), poly_trim(g));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Number of distinct roots mod `p` of the monic cubic `T^3 + b T^2 + c T + d`.
fn cubic_root_count(b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> u32 {
    let f = |t: &BigInt| modp(&(((t + b) * t + c) * t + d), p);
    if let Some(small) = p.to_u32().filter(|&q| q < 1000) {
        return (0..small).filter(|&t| f(&BigInt::from(t)).is_zero()).count() as u32;
    }
    cubic_root_count_by_gcd(b, c, d, p)
}

/// Degree of `gcd(T^p - T, T^3 + b T^2 + c T + d)` over `F_p`.
fn cubic_root_count_by_gcd(b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> u32 {
    let cubic = vec![modp(d, p), modp(c, p), modp(b, p), BigInt::one()];
    // T^p mod cubic by square-and-multiply
    let mut result = vec![BigInt::one()];
    let mut base = vec![BigInt::zero(), BigInt::one()];
    let mut e = p.magnitude().clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = poly_mulmod(&result, &base, &cubic, p);
        }
        base = poly_mulmod(&base, &base, &cubic, p);
        e >>= 1;
    }
    let mut tp_minus_t = result;
    tp_minus_t.resize(2.max(tp_minus_t.len()), BigInt::zero());
    tp_minus_t[1] = modp(&(&tp_minus_t[1] - 1), p);
    let tp_minus_t = poly_trim(tp_minus_t);
    if tp_minus_t.is_empty() {
        return 3;
    }
    poly_gcd_degree(cubic, tp_minus_t, p) as u32
}

/// Runs Tate's algorithm on an integral model at the prime `p`.
pub fn tate_algorithm(e: &WeierstrassModel, p: u64) -> Result<TateResult> {
    tate_algorithm_big(e, &BigUint::from(p))
}

pub fn tate_algorithm_big(e: &WeierstrassModel, p: &BigUint) -> Result<TateResult> {
    if !is_prime_big(p) {
        return Err(Error::NotPrime(alloc::string::ToString::to_string(p)));
    }
    if e.is_singular() {
        return Err(Error::Singular);
    }
    let pu = p.clone();
    let p = BigInt::from(p.clone());
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let p2 = &p * &p;
    let halfmodp = if p == two { BigInt::zero() } else { inverse(&two, &p) };

    let mut e = e.clone();
    let mut tr = Transform::identity();
    let mut minimal = true;
    let rat = |n: &BigInt| Rat::from_integer(n.clone());

    macro_rules! apply_shift {
        ($r:expr, $s:expr, $t:expr) => {{
            let (r, s, t): (BigInt, BigInt, BigInt) = ($r, $s, $t);
            e = shift(&e, &r, &s, &t);
            tr = tr.then(&Transform::shift(rat(&r), rat(&s), rat(&t)));
        }};
    }

    loop {
        let b = e.b_invariants();
        let vd = val(&b.disc, &p);
        let done = |kodaira: Kodaira, f: u32, c: u32, e: WeierstrassModel, tr: Transform| TateResult {
            p: pu.clone(),
            kodaira,
            f,
            c,
            minimal,
            val_disc: vd,
            model: e,
            transform: tr,
        };
        if vd == 0 {
            return Ok(done(Kodaira::I0, 0, 1, e, tr));
        }

        // move the singular point of the reduction to (0, 0)
        let (r, t) = if p == two {
            if divides(&p, &b.b2) {
                let r = modp(&e.a4, &p);
                let t = modp(&(&r * (1 + &e.a2 + &e.a4) + &e.a6), &p);
                (r, t)
            } else {
                let r = modp(&e.a3, &p);
                let t = modp(&(&r + &e.a4), &p);
                (r, t)
            }
        } else if p == three {
            let r = if divides(&p, &b.b2) { modp(&-&b.b6, &p) } else { modp(&-(&b.b2 * &b.b4), &p) };
            let t = modp(&(&e.a1 * &r + &e.a3), &p);
            (r, t)
        } else {
            let r = if divides(&p, &b.c4) {
                -inverse(&BigInt::from(12), &p) * &b.b2
            } else {
                -inverse(&(BigInt::from(12) * &b.c4), &p) * (&b.c6 + &b.b2 * &b.c4)
            };
            let r = modp(&r, &p);
            let t = modp(&(-&halfmodp * (&e.a1 * &r + &e.a3)), &p);
            (r, t)
        };
        apply_shift!(r, BigInt::zero(), t);

        let b = e.b_invariants();
        if !divides(&p, &b.c4) {
            let c = if quadratic_has_root(&BigInt::one(), &e.a1, &-&e.a2, &p) {
                vd
            } else if vd.is_even() {
                2
            } else {
                1
            };
            return Ok(done(Kodaira::I(vd), 1, c, e, tr));
        }
        if !divides(&p2, &e.a6) {
            return Ok(done(Kodaira::II, vd, 1, e, tr));
        }
        if !divides(&pow(&p, 3), &b.b8) {
            return Ok(done(Kodaira::III, vd - 1, 2, e, tr));
        }
        if !divides(&pow(&p, 3), &b.b6) {
            let c = if quadratic_has_root(&BigInt::one(), &(&e.a3 / &p), &-(&e.a6 / &p2), &p) { 3 } else { 1 };
            return Ok(done(Kodaira::IV, vd - 2, c, e, tr));
        }

        // now arrange p | a1, a2; p^2 | a3, a4; p^3 | a6
        let (s, t) = if p == two {
            (modp(&e.a2, &p), 2 * modp(&(&e.a6 / 4), &p))
        } else if p == three {
            (modp(&e.a1, &p), modp(&e.a3, &BigInt::from(9)))
        } else {
            (modp(&(-&e.a1 * &halfmodp), &p), modp(&(-&e.a3 * &halfmodp), &p2))
        };
        apply_shift!(BigInt::zero(), s, t);

        let p3 = pow(&p, 3);
        let bb = &e.a2 / &p;
        let cc = &e.a4 / &p2;
        let dd = &e.a6 / &p3;
        let w = 27 * &dd * &dd - &bb * &bb * &cc * &cc + 4 * &bb * &bb * &bb * &dd
            - 18 * &bb * &cc * &dd
            + 4 * &cc * &cc * &cc;
        let x = 3 * &cc - &bb * &bb;

        if !divides(&p, &w) {
            let c = 1 + cubic_root_count(&bb, &cc, &dd, &p);
            return Ok(done(Kodaira::I0Star, vd - 4, c, e, tr));
        }

        if !divides(&p, &x) {
            // double root: move it to 0, then peel off p alternately in y and x
            let r = if p == two {
                cc.clone()
            } else if p == three {
                &bb * &cc
            } else {
                (&bb * &cc - 9 * &dd) * inverse(&(2 * &x), &p)
            };
            apply_shift!(&p * modp(&r, &p), BigInt::zero(), BigInt::zero());
            let (mut ix, mut iy) = (3u32, 3u32);
            let mut mx = p2.clone();
            let mut my = p2.clone();
            let c = loop {
                let xa3 = &e.a3 / &my;
                let xa6 = &e.a6 / (&mx * &my);
                if !divides(&p, &(&xa3 * &xa3 + 4 * &xa6)) {
                    break if quadratic_has_root(&BigInt::one(), &xa3, &-&xa6, &p) { 4 } else { 2 };
                }
                let t = if p == two {
                    &my * &xa6
                } else {
                    &my * modp(&(-&xa3 * &halfmodp), &p)
                };
                apply_shift!(BigInt::zero(), BigInt::zero(), t);
                my *= &p;
                iy += 1;

                let xa2 = &e.a2 / &p;
                let xa4 = &e.a4 / (&p * &mx);
                let xa6 = &e.a6 / (&mx * &my);
                if !divides(&p, &(&xa4 * &xa4 - 4 * &xa2 * &xa6)) {
                    break if quadratic_has_root(&xa2, &xa4, &xa6, &p) { 4 } else { 2 };
                }
                let r = if p == two {
                    &mx * modp(&(&xa6 * &xa2), &p)
                } else {
                    &mx * modp(&(-&xa4 * inverse(&(2 * &xa2), &p)), &p)
                };
                apply_shift!(r, BigInt::zero(), BigInt::zero());
                mx *= &p;
                ix += 1;
            };
            let n = ix + iy - 5;
            return Ok(done(Kodaira::IStar(n), vd - n - 4, c, e, tr));
        }

        // triple root: move it to 0
        let rp = if p == three { -&dd } else { -&bb * inverse(&three, &p) };
        apply_shift!(&p * modp(&rp, &p), BigInt::zero(), BigInt::zero());
        let p4 = &p2 * &p2;
        let x3 = &e.a3 / &p2;
        let x6 = &e.a6 / &p4;
        if !divides(&p, &(&x3 * &x3 + 4 * &x6)) {
            let c = if quadratic_has_root(&BigInt::one(), &x3, &-&x6, &p) { 3 } else { 1 };
            return Ok(done(Kodaira::IVStar, vd - 6, c, e, tr));
        }
        let t = if p == two { x6 } else { &x3 * &halfmodp };
        apply_shift!(BigInt::zero(), BigInt::zero(), -&p2 * modp(&t, &p));
        if !divides(&p4, &e.a4) {
            return Ok(done(Kodaira::IIIStar, vd - 7, 2, e, tr));
        }
        if !divides(&pow(&p, 6), &e.a6) {
            return Ok(done(Kodaira::IIStar, vd - 8, 1, e, tr));
        }

        // not minimal: divide out u = p and start over
        minimal = false;
        e = Curve {
            a1: &e.a1 / &p,
            a2: &e.a2 / &p2,
            a3: &e.a3 / &p3,
            a4: &e.a4 / &p4,
            a6: &e.a6 / pow(&p, 6),
        };
        tr = tr.then(&Transform::scaling(rat(&p)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorResult {
    pub conductor: BigUint,
    /// Local data at every prime dividing the discriminant, ascending.
    pub local: Vec<TateResult>,
    pub minimal_discriminant: BigInt,
}

impl ConductorResult {
    pub fn local_at(&self, p: u64) -> Option<&TateResult> {
        let p = BigUint::from(p);
        self.local.iter().find(|l| l.p == p)
    }
}

/// Conductor via Tate's algorithm at every prime dividing the discriminant.
pub fn conductor_data(e: &WeierstrassModel) -> Result<ConductorResult> {
    let disc = e.discriminant();
    if disc.is_zero() {
        return Err(Error::Singular);
    }
    let mut conductor = BigUint::one();
    let mut minimal_discriminant = disc.clone();
    let mut local = Vec::new();
    for (p, _) in factor_big(&disc) {
        let data = tate_algorithm_big(e, &p)?;
        conductor *= num_traits::pow(p.clone(), data.f as usize);
        let pi = BigInt::from(p.clone());
        let v = val(&disc, &pi);
        minimal_discriminant /= pow(&pi, v - data.val_disc);
        local.push(data);
    }
    if minimal_discriminant.is_negative() != disc.is_negative() {
        minimal_discriminant = -minimal_discriminant;
    }
    Ok(ConductorResult { conductor, local, minimal_discriminant })
}

pub fn conductor(e: &WeierstrassModel) -> Result<BigUint> {
    Ok(conductor_data(e)?.conductor)
}
