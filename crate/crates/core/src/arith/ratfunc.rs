//! Reduced rational functions in `q^(1/2)`, `t^(1/2)`.

use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{self, Point};
use super::gcd::{div_exact, gcd};
use super::int::Int;
use super::poly::{LaurentPoly, Mono};
use crate::error::{Error, Result};

/// Canonical form: the denominator has componentwise minimum exponents (0, 0) and a
/// positive coefficient on its lowest term, numerator and denominator are coprime
/// (integer content included), and zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(Int::ONE)
    }

    pub fn from_int(c: Int) -> Self {
        RatFunc { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_int(Int::from(c))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::new(LaurentPoly::constant(Int::from(n)), LaurentPoly::constant(Int::from(d)))
            .expect("nonzero denominator")
    }

    pub fn from_bigrational(r: &BigRational) -> Self {
        Self::new(
            LaurentPoly::constant(Int::from_big(r.numer().clone())),
            LaurentPoly::constant(Int::from_big(r.denom().clone())),
        )
        .unwrap()
    }

    /// `c q^(a/2) t^(b/2)`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(Int::from(c), (a, b)))
    }

    pub fn q() -> Self {
        Self::monomial(1, 2, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 2)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Malformed("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (div_exact(&num, &g).unwrap(), div_exact(&den, &g).unwrap())
        };
        Ok(Self::canonical_units(num, den))
    }

    /// Fixes the unit ambiguity of an already coprime pair.
    fn canonical_units(num: LaurentPoly, den: LaurentPoly) -> Self {
        let m = den.min_exps().unwrap();
        let (mut num, mut den) = if m == (0, 0) {
            (num, den)
        } else {
            (num.shift((-m.0, -m.1)), den.shift((-m.0, -m.1)))
        };
        if den.first_coeff().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1 (a Laurent polynomial with integer coefficients).
    pub fn is_laurent_poly(&self) -> bool {
        self.den.is_one()
    }

    /// `Some((c, a, b))` when the value is `c q^(a/2) t^(b/2)` with integer `c`.
    pub fn as_monomial(&self) -> Option<(Int, i32, i32)> {
        if self.den.is_one() && self.num.is_monomial() {
            let ((a, b), c) = &self.num.terms()[0];
            Some((c.clone(), *a, *b))
        } else {
            None
        }
    }

    pub fn as_int(&self) -> Option<Int> {
        if self.den.is_one() {
            if self.num.is_zero() {
                return Some(Int::ZERO);
            }
            self.num.as_constant().cloned()
        } else {
            None
        }
    }

    /// Rough size used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical_units(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if let Some((c, a, b)) = self.as_monomial() {
            return Some(Self::from_poly(LaurentPoly::monomial(
                c.pow(e as u32),
                (a * e, b * e),
            )));
        }
        Some(RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let on = if negate { -&other.num } else { other.num.clone() };
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: &self.num + &on, den: LaurentPoly::one() };
        }
        if self.den == other.den {
            let n = &self.num + &on;
            return Self::new(n, self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = &(&self.num * &other.den) + &(&on * &self.den);
            if n.is_zero() {
                return Self::zero();
            }
            return Self::canonical_units(n, &self.den * &other.den);
        }
        let b1 = div_exact(&self.den, &g).unwrap();
        let d1 = div_exact(&other.den, &g).unwrap();
        let n = &(&self.num * &d1) + &(&on * &b1);
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&n, &g);
        let (n, g) = if g2.is_one() {
            (n, g)
        } else {
            (div_exact(&n, &g2).unwrap(), div_exact(&g, &g2).unwrap())
        };
        Self::canonical_units(n, &(&b1 * &d1) * &g)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: &self.num * &other.num, den: LaurentPoly::one() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let cut = |p: &LaurentPoly, g: &LaurentPoly| {
            if g.is_one() {
                p.clone()
            } else {
                div_exact(p, g).unwrap()
            }
        };
        let n = &cut(&self.num, &g1) * &cut(&other.num, &g2);
        let d = &cut(&self.den, &g2) * &cut(&other.den, &g1);
        Self::canonical_units(n, d)
    }

    /// Evaluates at the given values of `q^(1/2)` and `t^(1/2)`.
    pub fn eval_at<F: field::Field>(&self, pt: &Point<F>) -> Result<F> {
        let mut cache: HashMap<Mono, F> = HashMap::new();
        let mut ev = |p: &LaurentPoly| -> F {
            let mut acc = F::zero();
            for (m, c) in p.terms() {
                let v = cache.entry(*m).or_insert_with(|| pt.monomial(m.0, m.1)).clone();
                acc.add_assign(&v.mul(&F::from_int(c)));
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = ev(&self.num);
        Ok(n.mul(&d.inv().unwrap()))
    }

    fn has_half_exponent(&self, var: Var) -> bool {
        let odd = |p: &LaurentPoly| {
            p.terms().iter().any(|((a, b), _)| match var {
                Var::Q => a % 2 != 0,
                Var::T => b % 2 != 0,
            })
        };
        odd(&self.num) || odd(&self.den)
    }

    /// Exact value at rational `q`, `t`. Half-integer powers require exact rational
    /// square roots of the arguments.
    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let root = |x: &BigRational, var: Var| -> Result<Option<BigRational>> {
            if !self.has_half_exponent(var) {
                return Ok(None);
            }
            rational_sqrt(x)
                .map(Some)
                .ok_or_else(|| Error::Domain(format!("no rational square root of {x}")))
        };
        let rq = root(q0, Var::Q)?;
        let rt = root(t0, Var::T)?;
        let power = |x: &BigRational, r: &Option<BigRational>, e: i32| -> Result<BigRational> {
            let (base, e) = match r {
                Some(r) => (r.clone(), e),
                None => (x.clone(), e / 2),
            };
            if base.is_zero() {
                return match e.cmp(&0) {
                    std::cmp::Ordering::Less => Err(Error::Pole),
                    std::cmp::Ordering::Equal => Ok(BigRational::one()),
                    std::cmp::Ordering::Greater => Ok(BigRational::zero()),
                };
            }
            Ok(num_traits::pow::Pow::pow(&base, e))
        };
        let ev = |p: &LaurentPoly| -> Result<BigRational> {
            let mut acc = BigRational::zero();
            for ((a, b), c) in p.terms() {
                let v = power(q0, &rq, *a)? * power(t0, &rt, *b)?;
                acc += v * BigRational::from_integer(c.to_big());
            }
            Ok(acc)
        };
        let d = ev(&self.den)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(ev(&self.num)? / d)
    }

    /// Replaces `var` by `value`. A half-integer power of `var` requires `value` to be a
    /// monomial with a square root among monomials.
    pub fn substitute(&self, var: Var, value: &RatFunc) -> Result<RatFunc> {
        let pick = |m: Mono| match var {
            Var::Q => m.0,
            Var::T => m.1,
        };
        if value.is_zero() {
            let at_zero = |p: &LaurentPoly| -> Result<LaurentPoly> {
                let mut kept = Vec::new();
                for (m, c) in p.terms() {
                    match pick(*m).cmp(&0) {
                        std::cmp::Ordering::Less => return Err(Error::Pole),
                        std::cmp::Ordering::Equal => kept.push((*m, c.clone())),
                        std::cmp::Ordering::Greater => {}
                    }
                }
                Ok(LaurentPoly::from_terms(kept))
            };
            let d = at_zero(&self.den)?;
            if d.is_zero() {
                return Err(Error::Pole);
            }
            return Self::new(at_zero(&self.num)?, d);
        }
        let half = self.has_half_exponent(var);
        if let Some((c, a, b)) = value.as_monomial() {
            if c.abs().is_one() {
                // value = c q^(a/2) t^(b/2); the term exponent e counts half-steps of var
                if half && (a % 2 != 0 || b % 2 != 0 || c.is_negative()) {
                    return Err(Error::Domain("half power of a non-square value".into()));
                }
                let map = |p: &LaurentPoly| {
                    LaurentPoly::from_terms(p.terms().iter().map(|(m, coef)| {
                        let e = pick(*m);
                        let rest = match var {
                            Var::Q => (0, m.1),
                            Var::T => (m.0, 0),
                        };
                        let sign_flip = c.is_negative() && (e / 2) % 2 != 0;
                        let coef = if sign_flip { -coef } else { coef.clone() };
                        ((rest.0 + a * e / 2, rest.1 + b * e / 2), coef)
                    }))
                };
                let d = map(&self.den);
                if d.is_zero() {
                    return Err(Error::Pole);
                }
                return Self::new(map(&self.num), d);
            }
        }
        if half {
            return Err(Error::Domain("half power of a non-monomial value".into()));
        }
        let pt = match var {
            Var::Q => Point { q_half: RatFunc::zero(), t_half: RatFunc::monomial(1, 0, 1) },
            Var::T => Point { q_half: RatFunc::monomial(1, 1, 0), t_half: RatFunc::zero() },
        };
        let mut powers: HashMap<i32, RatFunc> = HashMap::new();
        let ev = |p: &LaurentPoly, powers: &mut HashMap<i32, RatFunc>| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (m, coef) in p.terms() {
                let e = pick(*m) / 2;
                let vp = powers
                    .entry(e)
                    .or_insert_with(|| value.pow(e).expect("nonzero value"))
                    .clone();
                let other = match var {
                    Var::Q => pt.t_half.pow(m.1).unwrap(),
                    Var::T => pt.q_half.pow(m.0).unwrap(),
                };
                let term = &(&vp * &other) * &RatFunc::from_int(coef.clone());
                acc = &acc + &term;
            }
            acc
        };
        let d = ev(&self.den, &mut powers);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = ev(&self.num, &mut powers);
        Ok(&n / &d)
    }

    /// Rational-coefficient view: each numerator term over the integer denominator,
    /// when the denominator is an integer.
    pub fn as_polynomial_over_q(&self) -> Option<(LaurentPoly, Int)> {
        self.den.as_constant().map(|d| (self.num.clone(), d.clone()))
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let exact = |n: &BigInt| {
        let r = n.sqrt();
        if &r * &r == *n {
            Some(r)
        } else {
            None
        }
    };
    Some(BigRational::new(exact(x.numer())?, exact(x.denom())?))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::cli::expr::render(self, crate::cli::expr::Display::QT))
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::cli::expr::render(self, crate::cli::expr::Display::QT))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(&rhs.inv().expect("division by zero rational function"))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
by_value!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl field::Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(n: &Int) -> Self {
        RatFunc::from_int(n.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_impl(o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
    fn pow(&self, e: i64) -> Option<Self> {
        RatFunc::pow(self, e as i32)
    }
    fn complexity(&self) -> usize {
        RatFunc::complexity(self)
    }
}

impl field::Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: &Int) -> Self {
        BigRational::from_integer(n.to_big())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }
    fn t() -> RatFunc {
        RatFunc::t()
    }
    fn c(n: i64) -> RatFunc {
        RatFunc::from_i64(n)
    }
    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_examples() {
        // (q^2 - q t)/q -> q - t
        let f = &(&(&q() * &q()) - &(&q() * &t())) / &q();
        assert_eq!(f, &q() - &t());
        // 0 / (1 - q t)
        let z = &RatFunc::zero() / &(&c(1) - &(&q() * &t()));
        assert!(z.is_zero());
        assert!(z.denom().is_one());
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn normalize_cancels_common_factors() {
        let one = c(1);
        let a = &(&one - &q().pow(2).unwrap()) * &(&one - &t());
        let b = &(&one - &q()) * &(&one - &t().pow(2).unwrap());
        let f = &a / &b;
        assert_eq!(f, &(&one + &q()) / &(&one + &t()));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!((&q() + &t()).evaluate(&br(1, 2), &br(1, 3)).unwrap(), br(5, 6));
        let one = c(1);
        let pole = &one / &(&one - &(&q() * &t()));
        assert_eq!(pole.evaluate(&br(1, 1), &br(1, 1)), Err(Error::Pole));
        let f = &(&(&one - &q()) * &(&one + &t())) / &(&one - &(&q() * &t()));
        assert_eq!(f.evaluate(&br(2, 1), &br(3, 1)).unwrap(), br(4, 5));
        let half = RatFunc::monomial(1, 1, 0);
        assert!(matches!(half.evaluate(&br(2, 1), &br(1, 1)), Err(Error::Domain(_))));
        assert_eq!(half.evaluate(&br(4, 9), &br(1, 1)).unwrap(), br(2, 3));
    }

    #[test]
    fn substitute_examples() {
        let one = c(1);
        let f = &(&one - &t()) / &(&one - &(&q() * &t()));
        assert_eq!(f.substitute(Var::Q, &RatFunc::zero()).unwrap(), &one - &t());
        let t2 = t().pow(2).unwrap();
        assert_eq!(t2.substitute(Var::T, &t().inv().unwrap()).unwrap(), t().pow(-2).unwrap());
        let g = &(&(&one - &q()) * &(&one + &t())) / &(&one - &(&q() * &t()));
        let expect = &(&(&q() - &one) * &(&one + &t())) / &(&q() - &t());
        assert_eq!(g.substitute(Var::Q, &q().inv().unwrap()).unwrap(), expect);
        let pole = &one / &q();
        assert_eq!(pole.substitute(Var::Q, &RatFunc::zero()), Err(Error::Pole));
        // general (non-monomial) value
        let h = &q() * &q();
        assert_eq!(h.substitute(Var::Q, &(&one - &t())).unwrap(), (&one - &t()).pow(2).unwrap());
    }

    #[test]
    fn half_powers() {
        let s = RatFunc::monomial(1, 1, -1);
        assert_eq!(s.pow(2).unwrap(), &q() / &t());
        assert_eq!(s.substitute(Var::Q, &t()).unwrap(), RatFunc::one());
    }
}
