//! Refined Chern-Simons amplitudes of torus knots, computed exactly.
//!
//! Scalars are reduced rational functions in `q^(1/2)` and `t^(1/2)`; symmetric functions
//! live in the power-sum basis over them. The knot operators are built from the modular
//! `S` and `T` matrices on Macdonald polynomials.

pub mod arith;
pub mod cli;
pub mod error;
pub mod knotcalc;
pub mod macdonald;
pub mod partitions;
pub mod symfunc;

pub use error::{Error, Result};
