//! Sparse Laurent polynomials in `q^(1/2)` and `t^(1/2)` with integer coefficients.
//!
//! Exponents count half-steps: the pair `(a, b)` stands for `q^(a/2) t^(b/2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::int::Int;

/// Exponent pair in half-steps, ordered lexicographically (q first).
pub type Mono = (i32, i32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// Strictly increasing in `Mono` order, no zero coefficients.
    terms: Vec<(Mono, Int)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: Int, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated, unordered) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Int)>>(it: I) -> Self {
        let mut v: Vec<(Mono, Int)> = it.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_with_dups(v)
    }

    fn from_sorted_with_dups(v: Vec<(Mono, Int)>) -> Self {
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { terms: out }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Mono, Int)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Int)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<&Int> {
        match self.terms.as_slice() {
            [((0, 0), c)] => Some(c),
            _ => None,
        }
    }

    /// Coefficient of the lowest term in `Mono` order.
    pub fn first_coeff(&self) -> Option<&Int> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: Mono) -> Int {
        match self.terms.binary_search_by(|(k, _)| k.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// Componentwise minimum exponents; `None` for zero.
    pub fn min_exps(&self) -> Option<Mono> {
        if self.terms.is_empty() {
            return None;
        }
        let mq = self.terms[0].0 .0;
        let mt = self.terms.iter().map(|(m, _)| m.1).min().unwrap();
        Some((mq, mt))
    }

    pub fn max_exps(&self) -> Option<Mono> {
        if self.terms.is_empty() {
            return None;
        }
        let mq = self.terms.last().unwrap().0 .0;
        let mt = self.terms.iter().map(|(m, _)| m.1).max().unwrap();
        Some((mq, mt))
    }

    /// Multiplies by `q^(s.0/2) t^(s.1/2)`.
    pub fn shift(&self, s: Mono) -> Self {
        if s == (0, 0) {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + s.0, b + s.1), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_int_exact(&self, c: &Int) -> Self {
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.div_exact(c))).collect(),
        }
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Gcd of all q-exponents and of all t-exponents (zero if a variable is absent).
    pub fn exponent_steps(&self) -> (i32, i32) {
        let mut gq = 0i32;
        let mut gt = 0i32;
        for ((a, b), _) in &self.terms {
            gq = gcd_i32(gq, *a);
            gt = gcd_i32(gt, *b);
        }
        (gq, gt)
    }

    /// Maps every exponent through `f`; `f` must be injective.
    pub fn map_exps<F: Fn(Mono) -> Mono>(&self, f: F) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let ((a, b), c) = &self.terms[0];
            return LaurentPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|((x, y), d)| ((x + a, y + b), c * d))
                    .collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.product(self);
        }
        let (lo1, hi1) = (self.min_exps().unwrap(), self.max_exps().unwrap());
        let (lo2, hi2) = (other.min_exps().unwrap(), other.max_exps().unwrap());
        let lo = (lo1.0 + lo2.0, lo1.1 + lo2.1);
        let w = (hi1.1 + hi2.1 - lo.1 + 1) as i64;
        let h = (hi1.0 + hi2.0 - lo.0 + 1) as i64;
        let pairs = (self.terms.len() * other.terms.len()) as i64;
        if w * h <= 4 * pairs + 64 {
            let mut dense = vec![Int::ZERO; (w * h) as usize];
            for ((a, b), c) in &self.terms {
                for ((x, y), d) in &other.terms {
                    let idx = ((a + x - lo.0) as i64 * w + (b + y - lo.1) as i64) as usize;
                    let prod = c * d;
                    dense[idx] += &prod;
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    let i = idx as i64;
                    terms.push((((i / w) as i32 + lo.0, (i % w) as i32 + lo.1), c));
                }
            }
            return LaurentPoly { terms };
        }
        let mut v = Vec::with_capacity(pairs as usize);
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                v.push(((a + x, b + y), c * d));
            }
        }
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_with_dups(v)
    }
}

pub(crate) fn gcd_i32(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*q^({a}/2)*t^({b}/2)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(m, c)| (m, Int::from(c))))
    }

    #[test]
    fn arithmetic() {
        let a = p(&[((0, 0), 1), ((2, 0), -1)]);
        let b = p(&[((0, 0), 1), ((2, 0), 1)]);
        assert_eq!(&a * &b, p(&[((0, 0), 1), ((4, 0), -1)]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b), p(&[((0, 0), 2)]));
        let sparse = p(&[((0, 0), 1), ((40, 2), 3)]);
        let sq = &sparse * &sparse;
        assert_eq!(sq, p(&[((0, 0), 1), ((40, 2), 6), ((80, 4), 9)]));
    }

    #[test]
    fn steps_and_extremes() {
        let a = p(&[((-2, 4), 1), ((4, 0), -1)]);
        assert_eq!(a.exponent_steps(), (2, 4));
        assert_eq!(a.min_exps(), Some((-2, 0)));
        assert_eq!(a.max_exps(), Some((4, 4)));
        assert_eq!(a.pow(3).len(), 4);
    }
}
