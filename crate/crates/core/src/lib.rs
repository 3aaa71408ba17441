//! Exact computations on modular curves `X_0(N)` and rational elliptic curves:
//! cuspidal divisor orders and group structure for square-free `N`, eta-quotient
//! modularity, Atkin-Lehner bookkeeping, Tate's algorithm, and the parity gates
//! and family searches for odd congruence number / odd modular degree.
//!
//! Pure `no_std` + `alloc`; IO, serialization and the CLI live in the
//! `cuspgate` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod atkin_lehner;
pub mod curve;
pub mod cusp;
pub mod error;
pub mod eta;
pub mod gates;
pub mod search;
pub mod snf;
pub mod tate;

pub use arith::{factor, num, Factorization, Rat};
pub use cusp::{CuspDivisor, EtaVector, Sign, SquarefreeLevel};
pub use error::{Error, Result};
