//! Exact scalar arithmetic.

pub mod field;
pub mod gcd;
pub mod int;
pub mod poly;
pub mod ratfunc;
pub mod zp;

pub use field::{Field, Fp, Point, PRIME_A, PRIME_B};
pub use int::Int;
pub use poly::{LaurentPoly, Mono};
pub use ratfunc::{RatFunc, Var};
