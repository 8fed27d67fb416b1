//! Computational value distribution for algebroid functions.
//!
//! A ν-valued algebroid function `w` on a plane domain is cut out by
//! `A_ν(z) w^ν + A_{ν-1}(z) w^{ν-1} + ... + A_0(z) = 0` with polynomial
//! coefficients and `A_ν` not identically zero. This crate computes the
//! algebraic side of that picture (resultants, discriminants, divisors,
//! monodromy permutations, Puiseux expansions, a combinatorial branch-order
//! calculus for radical expressions) and the analytic side (Nevanlinna
//! proximity/counting/characteristic functions, Ricci characteristic and
//! growth gauges on the Euclidean plane and the Poincaré disc), together
//! with numerical checkers that turn the classical theorems of the subject
//! (first and second main theorem, branch-divisor bound, defect relation,
//! value-sharing uniqueness criteria) into finite, falsifiable ledgers.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature and enable `libm` for embedded use. All operations are pure
//! functions of their inputs plus an explicit seed, so results are
//! reproducible bit for bit.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod branchlab;
pub mod error;
pub mod nevan;
pub mod polyalg;
pub mod radcalc;
pub mod theorems;

mod rng;

pub use error::Error;
pub use polyalg::{AlgebroidEquation, CPoly, Disc, Divisor1D, RootSet, SpherePoint};

/// Convenience alias used throughout: double-precision complex numbers.
pub type C64 = num_complex::Complex<f64>;
