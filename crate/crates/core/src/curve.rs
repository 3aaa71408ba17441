//! Weierstrass models `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`, their
//! invariants, changes of coordinates, and the group law.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};

use crate::arith::{is_rat_square, isqrt, rat_int, Rat};
use crate::error::{Error, Result};

/// Coefficient ring of a model: the integers or the rationals.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {
    fn from_i64(n: i64) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for Rat {
    fn from_i64(n: i64) -> Self {
        rat_int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve<R> {
    pub a1: R,
    pub a2: R,
    pub a3: R,
    pub a4: R,
    pub a6: R,
}

/// Integral model; the only kind the arithmetic algorithms accept.
pub type WeierstrassModel = Curve<BigInt>;
pub type RationalCurve = Curve<Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BInvariants<R> {
    pub b2: R,
    pub b4: R,
    pub b6: R,
    pub b8: R,
    pub c4: R,
    pub c6: R,
    pub disc: R,
}

fn c<R: Coeff>(n: i64) -> R {
    R::from_i64(n)
}

impl<R: Coeff> Curve<R> {
    pub fn new(a1: R, a2: R, a3: R, a4: R, a6: R) -> Self {
        Curve { a1, a2, a3, a4, a6 }
    }

    pub fn coeffs(&self) -> [&R; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn b_invariants(&self) -> BInvariants<R> {
        let Curve { a1, a2, a3, a4, a6 } = self.clone();
        let b2 = a1.clone() * a1.clone() + c::<R>(4) * a2.clone();
        let b4 = c::<R>(2) * a4.clone() + a1.clone() * a3.clone();
        let b6 = a3.clone() * a3.clone() + c::<R>(4) * a6.clone();
        let b8 = a1.clone() * a1.clone() * a6.clone() + c::<R>(4) * a2.clone() * a6
            - a1 * a3.clone() * a4.clone()
            + a2 * a3.clone() * a3
            - a4.clone() * a4;
        let c4 = b2.clone() * b2.clone() - c::<R>(24) * b4.clone();
        let c6 = -(b2.clone() * b2.clone() * b2.clone()) + c::<R>(36) * b2.clone() * b4.clone()
            - c::<R>(216) * b6.clone();
        let disc = -(b2.clone() * b2.clone() * b8.clone())
            - c::<R>(8) * b4.clone() * b4.clone() * b4.clone()
            - c::<R>(27) * b6.clone() * b6.clone()
            + c::<R>(9) * b2.clone() * b4.clone() * b6.clone();
        BInvariants { b2, b4, b6, b8, c4, c6, disc }
    }

    pub fn discriminant(&self) -> R {
        self.b_invariants().disc
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// Right-hand side minus left-hand side of the equation at `(x, y)`.
    pub fn eval(&self, x: &R, y: &R) -> R {
        let rhs = x.clone() * x.clone() * x.clone()
            + self.a2.clone() * x.clone() * x.clone()
            + self.a4.clone() * x.clone()
            + self.a6.clone();
        let lhs = y.clone() * y.clone()
            + self.a1.clone() * x.clone() * y.clone()
            + self.a3.clone() * y.clone();
        rhs - lhs
    }

    /// `4x^3 + b2 x^2 + 2 b4 x + b6`; its roots are the `x` of the 2-torsion points.
    pub fn two_division(&self, x: &R) -> R {
        let b = self.b_invariants();
        c::<R>(4) * x.clone() * x.clone() * x.clone()
            + b.b2 * x.clone() * x.clone()
            + c::<R>(2) * b.b4 * x.clone()
            + b.b6
    }
}

impl WeierstrassModel {
    pub fn from_ints(a: [i64; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = a.map(BigInt::from);
        Curve { a1, a2, a3, a4, a6 }
    }

    /// Rejects singular models.
    pub fn nonsingular(self) -> Result<Self> {
        if self.is_singular() {
            Err(Error::Singular)
        } else {
            Ok(self)
        }
    }

    pub fn to_rational(&self) -> RationalCurve {
        let [a1, a2, a3, a4, a6] = self.coeffs().map(|a| Rat::from_integer(a.clone()));
        Curve { a1, a2, a3, a4, a6 }
    }
}

impl RationalCurve {
    /// Integral model if every coefficient is an integer.
    pub fn to_integral(&self) -> Result<WeierstrassModel> {
        if self.coeffs().iter().any(|a| !a.denom().is_one()) {
            return Err(Error::NonIntegralModel);
        }
        let [a1, a2, a3, a4, a6] = self.coeffs().map(|a| a.numer().clone());
        Ok(Curve { a1, a2, a3, a4, a6 })
    }

    /// Clears denominators with `x -> x / k^2, y -> y / k^3`, `k` the lcm of the
    /// denominators. Returns the integral model and the transform used.
    pub fn clear_denominators(&self) -> (WeierstrassModel, Transform) {
        let k = self.coeffs().iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let t = Transform::scaling(Rat::new(BigInt::one(), k));
        let model = apply_transform_rational(self, &t)
            .expect("nonzero scale")
            .to_integral()
            .expect("lcm of denominators clears the model");
        (model, t)
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{},{}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

/// Parses `[a1,a2,a3,a4,a6]` (brackets and spaces optional).
impl FromStr for WeierstrassModel {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(alloc::format!("expected 5 coefficients, got {}", parts.len()));
        }
        let mut a = Vec::with_capacity(5);
        for p in parts {
            a.push(BigInt::from_str(p).map_err(|_| alloc::format!("invalid integer {p:?}"))?);
        }
        let mut it = a.into_iter();
        let mut next = || it.next().unwrap();
        Ok(Curve { a1: next(), a2: next(), a3: next(), a4: next(), a6: next() })
    }
}

/// `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    pub u: Rat,
    pub r: Rat,
    pub s: Rat,
    pub t: Rat,
}

impl Transform {
    pub fn new(u: Rat, r: Rat, s: Rat, t: Rat) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Transform { u, r, s, t })
    }

    pub fn identity() -> Self {
        Transform { u: Rat::one(), r: Rat::zero(), s: Rat::zero(), t: Rat::zero() }
    }

    pub fn scaling(u: Rat) -> Self {
        Transform { u, r: Rat::zero(), s: Rat::zero(), t: Rat::zero() }
    }

    pub fn shift(r: Rat, s: Rat, t: Rat) -> Self {
        Transform { u: Rat::one(), r, s, t }
    }

    pub fn inverse(&self) -> Self {
        let Transform { u, r, s, t } = self;
        let u2 = u * u;
        Transform {
            u: u.recip(),
            r: -r / &u2,
            s: -s / u,
            t: (r * s - t) / (&u2 * u),
        }
    }

    /// The transform equal to applying `self` and then `next`.
    pub fn then(&self, next: &Transform) -> Self {
        let u2 = &self.u * &self.u;
        Transform {
            u: &self.u * &next.u,
            r: &self.r + &u2 * &next.r,
            s: &self.s + &self.u * &next.s,
            t: &self.t + &u2 * &self.s * &next.r + &u2 * &self.u * &next.t,
        }
    }

    /// Coordinates of `p` on the transformed model.
    pub fn map_point(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let u2 = &self.u * &self.u;
                let x1 = (x - &self.r) / &u2;
                let y1 = (y - &self.s * &u2 * &x1 - &self.t) / (&u2 * &self.u);
                Point::Affine(x1, y1)
            }
        }
    }
}

pub fn apply_transform_rational(e: &RationalCurve, tr: &Transform) -> Result<RationalCurve> {
    if tr.u.is_zero() {
        return Err(Error::ZeroScale);
    }
    let Transform { u, r, s, t } = tr;
    let Curve { a1, a2, a3, a4, a6 } = e;
    let two = rat_int(2);
    let three = rat_int(3);
    let u2 = u * u;
    let u3 = &u2 * u;
    Ok(Curve {
        a1: (a1 + &two * s) / u,
        a2: (a2 - s * a1 + &three * r - s * s) / &u2,
        a3: (a3 + r * a1 + &two * t) / &u3,
        a4: (a4 - s * a3 + &two * r * a2 - (t + r * s) * a1 + &three * r * r - &two * s * t)
            / (&u2 * &u2),
        a6: (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (&u3 * &u3),
    })
}

/// Applies a change of coordinates to an integral model. Fails when the
/// result is not integral.
pub fn apply_transform(e: &WeierstrassModel, tr: &Transform) -> Result<WeierstrassModel> {
    apply_transform_rational(&e.to_rational(), tr)?.to_integral()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(Rat, Rat),
}

impl Point {
    pub fn x(&self) -> Option<&Rat> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, _) => Some(x),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => f.write_str("O"),
            Point::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl RationalCurve {
    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => self.eval(x, y).is_zero(),
        }
    }

    pub fn negate(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y - &self.a1 * x - &self.a3),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let Curve { a1, a2, a3, a4, a6 } = self;
        let (lambda, nu) = if x1 == x2 {
            let denom = y1 + y2 + a1 * x2 + a3;
            if denom.is_zero() {
                return Point::Infinity;
            }
            let denom = rat_int(2) * y1 + a1 * x1 + a3;
            let lambda = (rat_int(3) * x1 * x1 + rat_int(2) * a2 * x1 + a4 - a1 * y1) / &denom;
            let nu = (-(x1 * x1 * x1) + a4 * x1 + rat_int(2) * a6 - a3 * y1) / &denom;
            (lambda, nu)
        } else {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        Point::Affine(x3, y3)
    }

    pub fn double(&self, p: &Point) -> Point {
        self.add(p, p)
    }

    pub fn multiply(&self, p: &Point, n: u64) -> Point {
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.double(&base);
            n >>= 1;
        }
        acc
    }

    /// Smallest `n <= bound` with `n P = O`.
    pub fn order(&self, p: &Point, bound: u64) -> Option<u64> {
        let mut q = p.clone();
        for n in 1..=bound {
            if q == Point::Infinity {
                return Some(n);
            }
            q = self.add(&q, p);
        }
        None
    }

    /// A point with the given `x`, if the equation has a rational solution in `y`.
    pub fn lift_x(&self, x: &Rat) -> Option<Point> {
        // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
        let rhs = self.two_division(x);
        if !is_rat_square(&rhs) {
            return None;
        }
        let root = crate::arith::rat_sqrt(&rhs)?;
        let y = (root - &self.a1 * x - &self.a3) / rat_int(2);
        Some(Point::Affine(x.clone(), y))
    }
}

pub fn group_law_add(e: &RationalCurve, p: &Point, q: &Point) -> Result<Point> {
    if !e.contains(p) || !e.contains(q) {
        return Err(Error::PointNotOnCurve);
    }
    Ok(e.add(p, q))
}

/// `x(2Q) = (x^4 - b4 x^2 - 2 b6 x - b8) / (4x^3 + b2 x^2 + 2 b4 x + b6)`.
pub fn double_x(e: &impl ToRational, x: &Rat) -> Result<Rat> {
    let b = e.to_rational_curve().b_invariants();
    let x2 = x * x;
    let numer = &x2 * &x2 - &b.b4 * &x2 - rat_int(2) * &b.b6 * x - &b.b8;
    let denom = rat_int(4) * &x2 * x + &b.b2 * &x2 + rat_int(2) * &b.b4 * x + &b.b6;
    if denom.is_zero() {
        return Err(Error::TwoTorsionDuplication);
    }
    Ok(numer / denom)
}

pub trait ToRational {
    fn to_rational_curve(&self) -> RationalCurve;
}

impl ToRational for WeierstrassModel {
    fn to_rational_curve(&self) -> RationalCurve {
        self.to_rational()
    }
}

impl ToRational for RationalCurve {
    fn to_rational_curve(&self) -> RationalCurve {
        self.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoTorsion {
    Trivial,
    Z2,
    Z2xZ2,
}

impl TwoTorsion {
    pub fn order(self) -> u32 {
        match self {
            TwoTorsion::Trivial => 1,
            TwoTorsion::Z2 => 2,
            TwoTorsion::Z2xZ2 => 4,
        }
    }
}

impl fmt::Display for TwoTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwoTorsion::Trivial => "trivial",
            TwoTorsion::Z2 => "Z/2",
            TwoTorsion::Z2xZ2 => "Z/2 x Z/2",
        })
    }
}

/// Sorted integer roots of the monic cubic `X^3 + b X^2 + c X + d`.
pub fn integer_roots_monic_cubic(b: &BigInt, c: &BigInt, d: &BigInt) -> Vec<BigInt> {
    let f = |x: &BigInt| ((x + b) * x + c) * x + d;
    let bound = BigInt::one() + b.abs().max(c.abs()).max(d.abs());
    let mut roots = Vec::new();
    let push = |x: BigInt, roots: &mut Vec<BigInt>| {
        if f(&x).is_zero() && !roots.contains(&x) {
            roots.push(x);
        }
    };

    // f' = 3X^2 + 2bX + c; f is monotone between the real critical points
    let disc = BigInt::from(4) * b * b - BigInt::from(12) * c;
    let mut intervals = Vec::new();
    if disc.is_negative() {
        intervals.push((-&bound, bound.clone()));
    } else {
        let s = isqrt(&disc);
        let six = BigInt::from(6);
        let m2b: BigInt = -BigInt::from(2) * b;
        let lo_minus = (&m2b - &s - 1u32).div_floor(&six);
        let hi_minus = (&m2b - &s).div_ceil(&six);
        let lo_plus = (&m2b + &s).div_floor(&six);
        let hi_plus = (&m2b + &s + 1u32).div_ceil(&six);
        let mut x = lo_minus.clone();
        while x <= hi_minus {
            push(x.clone(), &mut roots);
            x += 1;
        }
        let mut x = lo_plus.clone();
        while x <= hi_plus {
            push(x.clone(), &mut roots);
            x += 1;
        }
        intervals.push((-&bound, lo_minus));
        intervals.push((hi_minus, lo_plus));
        intervals.push((hi_plus, bound.clone()));
    }
    for (lo, hi) in intervals {
        if lo > hi {
            continue;
        }
        if let Some(x) = monotone_root(&f, lo, hi) {
            push(x, &mut roots);
        }
    }
    roots.sort();
    roots
}

fn monotone_root<F: Fn(&BigInt) -> BigInt>(f: &F, mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    let flo = f(&lo);
    let fhi = f(&hi);
    if flo.is_zero() {
        return Some(lo);
    }
    if fhi.is_zero() {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    let lo_sign = flo.signum();
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let fm = f(&mid);
        if fm.is_zero() {
            return Some(mid);
        }
        if fm.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}

/// Rational 2-torsion points (excluding `O`) of an integral model.
pub fn two_torsion_points(e: &WeierstrassModel) -> Vec<Point> {
    // with X = 4x the 2-division polynomial becomes X^3 + b2 X^2 + 8 b4 X + 16 b6
    let b = e.b_invariants();
    let roots = integer_roots_monic_cubic(&b.b2, &(BigInt::from(8) * &b.b4), &(BigInt::from(16) * &b.b6));
    roots
        .into_iter()
        .map(|x4| {
            let x = Rat::new(x4, BigInt::from(4));
            let y = -(Rat::from_integer(e.a1.clone()) * &x + Rat::from_integer(e.a3.clone())) / rat_int(2);
            Point::Affine(x, y)
        })
        .collect()
}

pub fn two_torsion_structure(e: &WeierstrassModel) -> TwoTorsion {
    match two_torsion_points(e).len() {
        0 => TwoTorsion::Trivial,
        1 => TwoTorsion::Z2,
        _ => TwoTorsion::Z2xZ2,
    }
}

/// `#E(F_2)` of a model whose reduction mod 2 is nonsingular.
pub fn count_points_mod_2(e: &WeierstrassModel) -> u32 {
    let a: [u8; 5] = e.coeffs().map(|a| if a.is_odd() { 1 } else { 0 });
    let [a1, a2, a3, a4, a6] = a;
    let mut count = 1;
    for x in 0..2u8 {
        for y in 0..2u8 {
            let lhs = y * y + a1 * x * y + a3 * y;
            let rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (lhs + rhs) % 2 == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Whether a rational torsion subgroup of the claimed order can inject into
/// `E(F_2)`: true iff the order divides `#E(F_2)` of a model minimal at 2.
pub fn hasse_bound_check_at_2(e: &WeierstrassModel, claimed_order: u64) -> Result<bool> {
    if claimed_order == 0 {
        return Err(Error::Precondition("claimed torsion order must be positive"));
    }
    let local = crate::tate::tate_algorithm(e, 2)?;
    if local.f != 0 || local.val_disc != 0 {
        return Err(Error::BadReductionAtTwo);
    }
    let count = count_points_mod_2(&local.model);
    Ok(u64::from(count) % claimed_order == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::string::ToString;

    fn curve(a: [i64; 5]) -> WeierstrassModel {
        WeierstrassModel::from_ints(a)
    }

    #[test]
    fn invariants_examples() {
        let b = curve([1, 4, 0, 1, 0]).b_invariants();
        assert_eq!(
            [b.b2, b.b4, b.b6, b.b8, b.disc],
            [17, 2, 0, -1, 225].map(BigInt::from)
        );
        assert_eq!(curve([0, 0, 0, 0, 1]).discriminant(), BigInt::from(-432));
        // y^2 = x(x + a)(x + b)
        for (a, bb) in [(3i64, 5i64), (-7, 2), (15, 2)] {
            let e = curve([0, a + bb, 0, a * bb, 0]);
            let expect = 16 * (a * bb * (a - bb)).pow(2);
            assert_eq!(e.discriminant(), BigInt::from(expect));
        }
    }

    #[test]
    fn parse_and_display() {
        let e: WeierstrassModel = "[1, 4, 0, 1, 0]".parse().unwrap();
        assert_eq!(e, curve([1, 4, 0, 1, 0]));
        assert_eq!(e.to_string(), "[1,4,0,1,0]");
        assert!("[1,2,3]".parse::<WeierstrassModel>().is_err());
        assert!("[1,2,3,x,5]".parse::<WeierstrassModel>().is_err());
    }

    #[test]
    fn scaling_discriminant() {
        let e = curve([1, -1, 1, -10, -20]).to_rational();
        let t = Transform::scaling(rat(1, 2));
        let e2 = apply_transform_rational(&e, &t).unwrap();
        assert_eq!(e2.discriminant(), e.discriminant() * rat_int(4096));
        assert!(Transform::new(rat_int(0), rat_int(0), rat_int(0), rat_int(0)).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let e = curve([1, -1, 1, -10, -20]).to_rational();
        let t1 = Transform::new(rat(2, 3), rat(1, 5), rat(-3, 2), rat(7, 4)).unwrap();
        let t2 = Transform::new(rat(-5, 1), rat(2, 1), rat(0, 1), rat(-1, 3)).unwrap();
        let back = apply_transform_rational(&apply_transform_rational(&e, &t1).unwrap(), &t1.inverse()).unwrap();
        assert_eq!(back, e);
        let two_steps = apply_transform_rational(&apply_transform_rational(&e, &t1).unwrap(), &t2).unwrap();
        assert_eq!(two_steps, apply_transform_rational(&e, &t1.then(&t2)).unwrap());
        assert_eq!(t1.then(&t1.inverse()), Transform::identity());
    }

    #[test]
    fn transform_maps_points() {
        let e = curve([0, 0, 0, 0, 1]).to_rational();
        let t = Transform::new(rat(1, 2), rat(3, 1), rat(1, 1), rat(-2, 1)).unwrap();
        let e2 = apply_transform_rational(&e, &t).unwrap();
        let p = e.lift_x(&rat(2, 1)).unwrap();
        assert!(e2.contains(&t.map_point(&p)));
    }

    #[test]
    fn clearing_denominators() {
        let e = Curve::new(rat(1, 2), rat(1, 3), rat(0, 1), rat(5, 4), rat(1, 6));
        let (m, t) = e.clear_denominators();
        assert_eq!(apply_transform_rational(&e, &t).unwrap(), m.to_rational());
    }

    #[test]
    fn duplication() {
        let e = curve([0, 0, 0, -1, 0]);
        assert_eq!(double_x(&e, &rat_int(2)).unwrap(), rat(25, 24));
        for x in [0, 1, -1] {
            assert_eq!(double_x(&e, &rat_int(x)), Err(Error::TwoTorsionDuplication));
        }
        // order-4 point over (0, 0) on y^2 + xy = x^3 + a2 x^2 + a4 x with x^2 = a4
        let e = curve([1, 3, 0, 9, 0]);
        assert_eq!(double_x(&e, &rat_int(3)).unwrap(), rat_int(0));
        assert_eq!(double_x(&e, &rat_int(-3)).unwrap(), rat_int(0));
    }

    #[test]
    fn group_law_basics() {
        let e = curve([1, 4, 0, 1, 0]).to_rational();
        let o = Point::Infinity;
        let p = Point::Affine(rat_int(0), rat_int(0));
        assert_eq!(group_law_add(&e, &p, &o).unwrap(), p);
        assert_eq!(e.double(&p), Point::Infinity);
        assert_eq!(e.add(&p, &e.negate(&p)), Point::Infinity);
        assert!(group_law_add(&e, &Point::Affine(rat_int(1), rat_int(1)), &o).is_err());
    }

    #[test]
    fn two_torsion_examples() {
        assert_eq!(two_torsion_structure(&curve([0, 8, 0, 15, 0])), TwoTorsion::Z2xZ2);
        assert_eq!(two_torsion_structure(&curve([0, 0, 0, 1, 1])), TwoTorsion::Trivial);
        assert_eq!(two_torsion_structure(&curve([0, 0, 0, 0, 1])), TwoTorsion::Z2);
        assert_eq!(two_torsion_structure(&curve([1, 4, 0, 1, 0])), TwoTorsion::Z2xZ2);
        assert_eq!(two_torsion_structure(&curve([1, 1, 0, 4, 0])), TwoTorsion::Z2);
        for p in two_torsion_points(&curve([1, 4, 0, 1, 0])) {
            assert!(curve([1, 4, 0, 1, 0]).to_rational().contains(&p));
        }
    }

    #[test]
    fn cubic_roots() {
        let r = |b: i64, c: i64, d: i64| {
            integer_roots_monic_cubic(&BigInt::from(b), &BigInt::from(c), &BigInt::from(d))
        };
        // (X - 1)(X - 2)(X + 3) = X^3 - 7X + 6
        assert_eq!(r(0, -7, 6), [-3, 1, 2].map(BigInt::from));
        // (X - 5)(X^2 + 1)
        assert_eq!(r(-5, 1, -5), [BigInt::from(5)]);
        assert!(r(0, 0, 2).is_empty());
        // adjacent roots around a critical point
        assert_eq!(r(-1, -2, 0), [-1, 0, 2].map(BigInt::from));
    }

    #[test]
    fn points_mod_2() {
        // y^2 + y = x^3 - x has 5 points over F_2 (conductor 37)
        assert_eq!(count_points_mod_2(&curve([0, 0, 1, -1, 0])), 5);
        // 11a3: y^2 + y = x^3 - x^2
        assert_eq!(count_points_mod_2(&curve([0, -1, 1, 0, 0])), 5);
        assert_eq!(hasse_bound_check_at_2(&curve([0, -1, 1, 0, 0]), 5), Ok(true));
        assert_eq!(hasse_bound_check_at_2(&curve([0, -1, 1, 0, 0]), 6), Ok(false));
        assert_eq!(hasse_bound_check_at_2(&curve([0, -1, 1, 0, 0]), 8), Ok(false));
        assert_eq!(hasse_bound_check_at_2(&curve([0, 0, 0, -1, 0]), 2), Err(Error::BadReductionAtTwo));
    }
}
