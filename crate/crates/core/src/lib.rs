//! Exact computations on plane algebraic curves.
//!
//! Everything here is carried out over an exact field: arbitrary-precision
//! rationals or a prime field `F_p`. The crate covers homogeneous polynomial
//! algebra (evaluation, resultants, discriminants, root multiplicities),
//! point configurations and imposed-conditions rank tests, linear projections
//! of smooth curves with their branch divisors, linear systems of divisors
//! via Riemann-Roch, symmetric-group counting of branched coverings, and the
//! group law on cubics in Weierstrass form.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and report formats live in
//! the companion `planecurves-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cubic;
pub mod curve;
pub mod hurwitz;
pub mod linsys;
pub mod pointconf;
pub mod rng;

pub use algebra::{BinaryForm, FieldTag, HomogPoly, Scalar};
pub use pointconf::{Configuration, PointP2};
