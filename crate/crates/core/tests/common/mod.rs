//! Brute-force oracles shared by the integration tests. None of these go
//! through the lattice isomorphism or Tate's algorithm.

#![allow(dead_code)]

use cuspgate_core::curve::WeierstrassModel;
use cuspgate_core::eta::{eta_order_at_cusp, ligozat_check, EtaExponents};
use cuspgate_core::{CuspDivisor, Rat, SquarefreeLevel};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Solves `A x = b` over the rationals by Gauss-Jordan elimination.
pub fn solve(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        a[col].iter_mut().for_each(|x| *x = &*x * &inv);
        b[col] = &b[col] * &inv;
        let pivot_row = a[col].clone();
        for r in (0..n).filter(|&r| r != col) {
            let f = a[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                *x = &*x - &f * p;
            }
            let v = &f * &b[col];
            b[r] = &b[r] - v;
        }
    }
    Some(b)
}

/// Exponents `r_delta` whose eta quotient has divisor `w`, solved directly
/// from the vanishing orders at each cusp.
pub fn eta_exponents_for(w: &CuspDivisor) -> Vec<Rat> {
    let level = w.level();
    let n = level.n();
    let divisors = level.sorted_divisors();
    let a: Vec<Vec<Rat>> = divisors
        .iter()
        .map(|&r| divisors.iter().map(|&d| eta_order_at_cusp(n, n / r, d).unwrap()).collect())
        .collect();
    let b: Vec<Rat> = divisors.iter().map(|&r| w.get(r).unwrap().clone()).collect();
    solve(a, b).expect("vanishing-order matrix is invertible")
}

/// Whether `w` is the divisor of a modular eta quotient.
pub fn principal_oracle(w: &CuspDivisor) -> bool {
    let r = eta_exponents_for(w);
    if r.iter().any(|c| !c.is_integer()) {
        return false;
    }
    let ex = EtaExponents::new(w.level().n(), r).unwrap();
    ligozat_check(&ex).is_modular()
}

/// Smallest `k >= 1` with `k w` principal, by direct search.
pub fn order_oracle(w: &CuspDivisor, limit: u64) -> Option<u64> {
    (1..=limit).find(|&k| principal_oracle(&w.scale(&Rat::from_integer(BigInt::from(k)))))
}

pub fn level(n: u64) -> SquarefreeLevel {
    SquarefreeLevel::new(n).unwrap()
}

pub fn squarefree_levels(max: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(|&n| (2..=n).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0))
}

fn residue(x: &BigInt, p: u64) -> i64 {
    x.mod_floor(&BigInt::from(p)).to_i64().unwrap()
}

/// Reduction of an integral model mod `p`, as residues in `0..p`.
fn reduce(e: &WeierstrassModel, p: u64) -> [i64; 5] {
    [residue(&e.a1, p), residue(&e.a2, p), residue(&e.a3, p), residue(&e.a4, p), residue(&e.a6, p)]
}

/// Projective points on the reduction mod `p`, singular point included.
pub fn count_points(e: &WeierstrassModel, p: u64) -> u64 {
    let [a1, a2, a3, a4, a6] = reduce(e, p);
    let p = p as i64;
    let mut count = 1;
    for x in 0..p {
        for y in 0..p {
            let f = y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
            if f.rem_euclid(p) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Whether the reduction mod `p` has a singular point.
pub fn singular_mod(e: &WeierstrassModel, p: u64) -> bool {
    let [a1, a2, a3, a4, a6] = reduce(e, p);
    let p = p as i64;
    (0..p).any(|x| {
        (0..p).any(|y| {
            let f = y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
            let fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
            let fy = 2 * y + a1 * x + a3;
            [f, fx, fy].iter().all(|v| v.rem_euclid(p) == 0)
        })
    })
}

pub fn small_primes(max: u64) -> Vec<u64> {
    (2..=max).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

pub fn v2(n: &BigInt) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let mut n = n.abs();
    let mut v = 0;
    while n.is_even() {
        n >>= 1;
        v += 1;
    }
    v
}

