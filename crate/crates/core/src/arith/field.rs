//! The scalar interface shared by exact rational functions and modular point values.

use std::fmt::Debug;

use num_bigint::BigInt;

use super::int::Int;
use super::zp;

/// A commutative field together with the two distinguished elements `q^(1/2)` and
/// `t^(1/2)` supplied by a [`Point`].
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: &Int) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&Int::from(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let d = Self::from_int(&Int::from_big(den.clone()));
        Some(Self::from_int(&Int::from_big(num.clone())).mul(&d.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Size estimate for choosing cheap pivots.
    fn complexity(&self) -> usize {
        1
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn pow(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }
}

/// Values of `q^(1/2)` and `t^(1/2)` in a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<F> {
    pub q_half: F,
    pub t_half: F,
}

impl<F: Field> Point<F> {
    /// `q^(a/2) t^(b/2)`.
    pub fn monomial(&self, a: i32, b: i32) -> F {
        let x = self.q_half.pow(a as i64).expect("q^(1/2) must be invertible");
        let y = self.t_half.pow(b as i64).expect("t^(1/2) must be invertible");
        x.mul(&y)
    }

    pub fn q(&self) -> F {
        self.monomial(2, 0)
    }

    pub fn t(&self) -> F {
        self.monomial(0, 2)
    }
}

/// Element of Z/P for a prime `P < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(pub u64);

pub const PRIME_A: u64 = 4_611_686_018_427_387_847; // 2^62 - 57
pub const PRIME_B: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    /// Representative in `(-P/2, P/2]`.
    pub fn signed(&self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_int(n: &Int) -> Self {
        Fp(n.mod_u64(P))
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp(zp::addmod(self.0, o.0, P))
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(zp::submod(self.0, o.0, P))
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(zp::mulmod(self.0, o.0, P))
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Option<Self> {
        zp::invmod(self.0, P).map(Fp)
    }
}
