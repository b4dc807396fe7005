//! Symmetric functions over a scalar field, stored in power sums.
//!
//! A [`SymFunc`] is a sparse coefficient map in one of several bases. Conversions
//! that need the values of `q` and `t` go through an [`Engine`], which fixes the
//! field and the point; the exact engine works over [`RatFunc`] with `q`, `t`
//! symbolic.

pub mod tables;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::arith::{Field, Point, RatFunc};
use crate::error::{Error, Result};
use crate::partitions::Partition;
pub use tables::{tables, Tables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p`.
    PowerSum,
    /// Monomial symmetric functions `m`.
    Monomial,
    Schur,
    /// Macdonald `P`, written `M` in the tables.
    Macdonald,
    HallLittlewood,
    /// `HL'`: rescale by `t^k - 1`, set `t = 0`, invert `q`.
    QWhittaker,
    /// `q_whittaker` with power sums rescaled by `1 - t^k`.
    DualHallLittlewood,
    /// `S~_Y{p} = S_Y{(1 - t^k) p_k} / (1 - t)`.
    ModifiedSchur,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::Monomial => "m",
            Basis::Schur => "S",
            Basis::Macdonald => "M",
            Basis::HallLittlewood => "HL",
            Basis::QWhittaker => "HL'",
            Basis::DualHallLittlewood => "dHL",
            Basis::ModifiedSchur => "S~",
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct SymFunc<F: Field = RatFunc> {
    basis: Basis,
    terms: BTreeMap<Partition, F>,
}

impl<F: Field> SymFunc<F> {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Basis::PowerSum, Partition::empty(), F::one())
    }

    pub fn term(basis: Basis, lambda: Partition, c: F) -> Self {
        Self::from_terms(basis, [(lambda, c)])
    }

    /// `p_lambda`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(Basis::PowerSum, lambda, F::one())
    }

    /// Sums repeated keys and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Partition, F)>>(basis: Basis, it: I) -> Self {
        let mut terms: BTreeMap<Partition, F> = BTreeMap::new();
        for (l, c) in it {
            match terms.get_mut(&l) {
                Some(v) => v.add_assign(&c),
                None => {
                    terms.insert(l, c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymFunc { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, F> {
        &self.terms
    }

    pub fn coeff(&self, l: &Partition) -> F {
        self.terms.get(l).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|lambda|` present.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|l| l.size()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn same_basis(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "mixing bases; convert first");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_basis(other);
        let mut terms = self.terms.clone();
        for (l, c) in &other.terms {
            match terms.get_mut(l) {
                Some(v) => v.add_assign(c),
                None => {
                    terms.insert(l.clone(), c.clone());
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymFunc { basis: self.basis, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, v)| (l.clone(), v.mul(c))).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SymFunc<G> {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Same coefficients, relabelled as another basis (no conversion).
    pub fn relabel(&self, basis: Basis) -> Self {
        SymFunc { basis, terms: self.terms.clone() }
    }

    /// Product in power sums, where `p_lambda p_mu = p_(lambda union mu)`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.basis, Basis::PowerSum, "multiply needs power sums");
        other.same_basis(self);
        let mut out: Vec<(Partition, F)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.push((a.union(b), x.mul(y)));
            }
        }
        Self::from_terms(Basis::PowerSum, out)
    }

    /// `p_lambda -> prod_i factor(lambda_i) p_lambda`.
    pub fn scale_power_sums(&self, factor: impl Fn(usize) -> F) -> Self {
        assert_eq!(self.basis, Basis::PowerSum, "rescaling needs power sums");
        let mut memo: HashMap<usize, F> = HashMap::new();
        let mut f = |k: usize| memo.entry(k).or_insert_with(|| factor(k)).clone();
        Self::from_terms(
            Basis::PowerSum,
            self.terms.iter().map(|(l, c)| {
                let mut v = c.clone();
                for &k in l.parts() {
                    v = v.mul(&f(k));
                }
                (l.clone(), v)
            }),
        )
    }

    /// Substitutes a value for every `p_k`.
    pub fn specialize(&self, value: impl Fn(usize) -> F) -> F {
        assert_eq!(self.basis, Basis::PowerSum, "specialization needs power sums");
        let mut memo: HashMap<usize, F> = HashMap::new();
        let mut acc = F::zero();
        for (l, c) in &self.terms {
            let mut v = c.clone();
            for &k in l.parts() {
                let pk = memo.entry(k).or_insert_with(|| value(k)).clone();
                v = v.mul(&pk);
            }
            acc.add_assign(&v);
        }
        acc
    }

    /// Dense power-sum coefficients of degree `d` in `tables(d)` order.
    pub fn dense(&self, d: usize) -> Vec<F> {
        assert_eq!(self.basis, Basis::PowerSum);
        self.dense_in(d)
    }

    /// Dense coefficients of degree `d` in the current basis.
    pub fn dense_in(&self, d: usize) -> Vec<F> {
        let t = tables(d);
        let mut v = vec![F::zero(); t.len()];
        for (l, c) in &self.terms {
            if l.size() == d {
                v[t.idx(l)] = c.clone();
            }
        }
        v
    }

    pub fn from_dense(basis: Basis, d: usize, v: &[F]) -> Self {
        let t = tables(d);
        Self::from_terms(basis, t.parts.iter().cloned().zip(v.iter().cloned()))
    }
}

impl<F: Field> std::fmt::Debug for SymFunc<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sym = self.basis.symbol();
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("{c:?} {sym}{l:?}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub(crate) fn field_of<F: Field>(r: &num_rational::BigRational) -> F {
    F::from_ratio(r.numer(), r.denom()).expect("rational with nonzero denominator")
}

/// Field images of the rational tables of one degree, plus point-dependent weights.
pub struct Weights<F> {
    pub t: Arc<Tables>,
    pub m_to_p: Vec<Vec<F>>,
    pub chi: Vec<Vec<F>>,
    /// `1 / z_nu`.
    pub inv_z: Vec<F>,
    /// `<p_nu, p_nu> = z_nu prod (1 - q^nu_i)/(1 - t^nu_i)`.
    pub pair: Vec<F>,
    /// `prod (1 - t^nu_i) / (1 - t)`: p-coefficient factor of `S~` relative to `S`.
    pub ms: Vec<F>,
}

/// A field with fixed `q^(1/2)`, `t^(1/2)` plus caches of everything derived from them.
pub struct Engine<F: Field> {
    pub pt: Point<F>,
    weights: Mutex<HashMap<usize, Arc<Weights<F>>>>,
    pub(crate) mac: Mutex<HashMap<usize, Arc<crate::macdonald::MacDegree<F>>>>,
    pub(crate) hl: OnceLock<Box<Engine<F>>>,
    pub(crate) whittaker: OnceLock<Box<Engine<F>>>,
}

impl<F: Field> Engine<F> {
    pub fn new(pt: Point<F>) -> Self {
        Engine {
            pt,
            weights: Mutex::new(HashMap::new()),
            mac: Mutex::new(HashMap::new()),
            hl: OnceLock::new(),
            whittaker: OnceLock::new(),
        }
    }

    pub fn q(&self) -> F {
        self.pt.q()
    }

    pub fn t(&self) -> F {
        self.pt.t()
    }

    /// `q^(a/2) t^(b/2)`.
    pub fn mono(&self, a: i32, b: i32) -> F {
        self.pt.monomial(a, b)
    }

    /// `1 - q^a t^b` for integer exponents `a, b >= 0`.
    pub fn one_minus(&self, a: i32, b: i32) -> F {
        F::one().sub(&self.mono(2 * a, 2 * b))
    }

    pub fn weights(&self, d: usize) -> Arc<Weights<F>> {
        if let Some(w) = self.weights.lock().unwrap().get(&d) {
            return w.clone();
        }
        let t = tables(d);
        let conv = |r: &num_rational::BigRational| field_of::<F>(r);
        let m_to_p = t.m_to_p.iter().map(|row| row.iter().map(conv).collect()).collect();
        let chi = t.chi.iter().map(|row| row.iter().map(F::from_int).collect()).collect();
        let one = BigInt::from(1);
        let inv_z = t.z.iter().map(|z| F::from_ratio(&one, z).unwrap()).collect();
        let mut pair = Vec::with_capacity(t.len());
        let mut ms = Vec::with_capacity(t.len());
        for (nu, z) in t.parts.iter().zip(&t.z) {
            let mut w = F::from_int(&crate::arith::Int::from_big(z.clone()));
            let mut s = F::one();
            for &k in nu.parts() {
                let k = k as i32;
                w = w.mul(&self.one_minus(k, 0)).mul(&self.one_minus(0, k).inv().expect("1 - t^k vanishes"));
                s = s.mul(&self.one_minus(0, k));
            }
            pair.push(w);
            if nu.is_empty() {
                ms.push(F::one());
            } else {
                ms.push(s.mul(&self.one_minus(0, 1).inv().expect("1 - t vanishes")));
            }
        }
        let w = Arc::new(Weights { t, m_to_p, chi, inv_z, pair, ms });
        self.weights.lock().unwrap().entry(d).or_insert(w).clone()
    }

    /// `<f, g>` in the stable pairing, diagonal on power sums.
    pub fn qt_inner(&self, f: &SymFunc<F>, g: &SymFunc<F>) -> Result<F> {
        let f = self.to_canonical(f)?;
        let g = self.to_canonical(g)?;
        let mut acc = F::zero();
        for (l, c) in f.terms() {
            if let Some(e) = g.terms().get(l) {
                let w = self.weights(l.size());
                acc.add_assign(&c.mul(e).mul(&w.pair[w.t.idx(l)]));
            }
        }
        Ok(acc)
    }

    /// Dense inner product of two power-sum vectors of degree `d`.
    pub fn inner_dense(&self, d: usize, f: &[F], g: &[F]) -> F {
        let w = self.weights(d);
        let mut acc = F::zero();
        for i in 0..f.len() {
            if !f[i].is_zero() && !g[i].is_zero() {
                acc.add_assign(&f[i].mul(&g[i]).mul(&w.pair[i]));
            }
        }
        acc
    }

    /// Power-sum expansion of one basis element, dense in degree `|lambda|`.
    pub fn element(&self, basis: Basis, lambda: &Partition) -> Result<Vec<F>> {
        let d = lambda.size();
        let w = self.weights(d);
        let i = w.t.idx(lambda);
        Ok(match basis {
            Basis::PowerSum => {
                let mut v = vec![F::zero(); w.t.len()];
                v[i] = F::one();
                v
            }
            Basis::Monomial => w.m_to_p[i].clone(),
            Basis::Schur => (0..w.t.len()).map(|n| w.chi[i][n].mul(&w.inv_z[n])).collect(),
            Basis::ModifiedSchur => {
                (0..w.t.len()).map(|n| w.chi[i][n].mul(&w.inv_z[n]).mul(&w.ms[n])).collect()
            }
            Basis::Macdonald => self.macdonald_dense(lambda),
            Basis::HallLittlewood => self.hall_littlewood_dense(lambda),
            Basis::QWhittaker => self.q_whittaker_dense(lambda),
            Basis::DualHallLittlewood => self.dual_hall_littlewood_dense(lambda),
        })
    }

    /// Same element rewritten in power sums.
    pub fn to_canonical(&self, f: &SymFunc<F>) -> Result<SymFunc<F>> {
        if f.basis() == Basis::PowerSum {
            return Ok(f.clone());
        }
        let mut out: Vec<(Partition, F)> = Vec::new();
        for (l, c) in f.terms() {
            let e = self.element(f.basis(), l)?;
            let t = tables(l.size());
            for (nu, v) in t.parts.iter().zip(e) {
                if !v.is_zero() {
                    out.push((nu.clone(), v.mul(c)));
                }
            }
        }
        Ok(SymFunc::from_terms(Basis::PowerSum, out))
    }

    /// Coefficients of `f` in `target`.
    pub fn expand(&self, f: &SymFunc<F>, target: Basis) -> Result<SymFunc<F>> {
        let f = self.to_canonical(f)?;
        let mut out: Vec<(Partition, F)> = Vec::new();
        for d in f.degrees() {
            let v = f.dense(d);
            let c = self.expand_dense(d, &v, target)?;
            out.extend(tables(d).parts.iter().cloned().zip(c));
        }
        Ok(SymFunc::from_terms(target, out))
    }

    /// Dense version of [`Engine::expand`] for one homogeneous degree.
    pub fn expand_dense(&self, d: usize, v: &[F], target: Basis) -> Result<Vec<F>> {
        let w = self.weights(d);
        let n = w.t.len();
        let dot = |row: &dyn Fn(usize) -> F| -> F {
            let mut acc = F::zero();
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc.add_assign(&x.mul(&row(k)));
                }
            }
            acc
        };
        Ok(match target {
            Basis::PowerSum => v.to_vec(),
            Basis::Monomial => (0..n)
                .map(|mu| dot(&|k| F::from_int(&w.t.p_to_m[k][mu])))
                .collect(),
            Basis::Schur => (0..n).map(|y| dot(&|k| w.chi[y][k].clone())).collect(),
            Basis::ModifiedSchur => {
                let inv: Vec<F> = w.ms.iter().map(|x| x.inv().expect("S~ weight vanishes")).collect();
                (0..n).map(|y| dot(&|k| w.chi[y][k].mul(&inv[k]))).collect()
            }
            Basis::Macdonald => {
                let mac = self.mac_degree(d);
                (0..n)
                    .map(|a| {
                        let num = self.inner_dense(d, v, &mac.p[a]);
                        num.mul(&mac.norm_inv[a])
                    })
                    .collect()
            }
            other => {
                let rows: Vec<Vec<F>> = w
                    .t
                    .parts
                    .iter()
                    .map(|l| self.element(other, l))
                    .collect::<Result<_>>()?;
                solve_transposed(&rows, v)?
            }
        })
    }
}

/// Solves `sum_i x_i rows[i] = v` by Gaussian elimination.
fn solve_transposed<F: Field>(rows: &[Vec<F>], v: &[F]) -> Result<Vec<F>> {
    let n = rows.len();
    // matrix a[k][i] = rows[i][k]
    let mut a: Vec<Vec<F>> = (0..n).map(|k| (0..n).map(|i| rows[i][k].clone()).collect()).collect();
    let mut b: Vec<Vec<F>> = v.iter().map(|x| vec![x.clone()]).collect();
    let x = crate::knotcalc::solve::solve(&mut a, &mut b)?;
    Ok(x.into_iter().map(|mut r| r.remove(0)).collect())
}

/// The exact engine: `q`, `t` symbolic.
pub fn exact() -> &'static Engine<RatFunc> {
    static E: OnceLock<Engine<RatFunc>> = OnceLock::new();
    E.get_or_init(|| Engine::new(Point { q_half: RatFunc::monomial(1, 1, 0), t_half: RatFunc::monomial(1, 0, 1) }))
}

fn unwrap_exact<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("exact symmetric-function operation failed: {e}"))
}

/// Power-sum canonical form.
pub fn to_canonical(f: &SymFunc) -> SymFunc {
    unwrap_exact(exact().to_canonical(f))
}

pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    to_canonical(f).multiply(&to_canonical(g))
}

pub fn qt_inner(f: &SymFunc, g: &SymFunc) -> RatFunc {
    unwrap_exact(exact().qt_inner(f, g))
}

pub fn scale_power_sums(f: &SymFunc, factor: impl Fn(usize) -> RatFunc) -> SymFunc {
    to_canonical(f).scale_power_sums(factor)
}

pub fn schur(lambda: &Partition) -> SymFunc {
    to_canonical(&SymFunc::term(Basis::Schur, lambda.clone(), RatFunc::one()))
}

pub fn monomial(lambda: &Partition) -> SymFunc {
    to_canonical(&SymFunc::term(Basis::Monomial, lambda.clone(), RatFunc::one()))
}

/// Coefficients of `f` in `target`, exactly.
pub fn expand_in_basis(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    exact().expand(f, target)
}

/// Parses a basis name as used on the command line.
pub fn parse_basis(s: &str) -> Result<Basis> {
    Ok(match s {
        "p" | "powersum" => Basis::PowerSum,
        "m" | "monomial" => Basis::Monomial,
        "schur" | "s" => Basis::Schur,
        "macdonald" | "M" => Basis::Macdonald,
        "hl" => Basis::HallLittlewood,
        "qwhittaker" | "hl'" => Basis::QWhittaker,
        "dhl" => Basis::DualHallLittlewood,
        "mschur" | "S~" => Basis::ModifiedSchur,
        _ => return Err(Error::Malformed(format!("unknown basis '{s}'"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::expr::parse;
    use crate::part;

    fn p(l: Partition, c: &str) -> SymFunc {
        SymFunc::term(Basis::PowerSum, l, parse(c).unwrap())
    }

    #[test]
    fn canonical_examples() {
        let m2 = SymFunc::term(Basis::Monomial, part![2], RatFunc::one());
        assert_eq!(to_canonical(&m2), p(part![2], "1"));
        let m11 = SymFunc::term(Basis::Monomial, part![1, 1], RatFunc::one());
        assert_eq!(to_canonical(&m11), p(part![1, 1], "1/2").add(&p(part![2], "-1/2")));
        assert_eq!(schur(&part![2]), p(part![1, 1], "1/2").add(&p(part![2], "1/2")));
        assert_eq!(schur(&part![1]), p(part![1], "1"));
        assert_eq!(schur(&part![1, 1]), p(part![1, 1], "1/2").add(&p(part![2], "-1/2")));
    }

    #[test]
    fn multiply_and_inner_examples() {
        let p1 = p(part![1], "1");
        assert_eq!(multiply(&p1, &p1), p(part![1, 1], "1"));
        assert_eq!(multiply(&p1, &SymFunc::one()), p1);
        assert_eq!(qt_inner(&p1, &p1), parse("(1-q)/(1-t)").unwrap());
        assert!(qt_inner(&p(part![2], "1"), &p(part![1, 1], "1")).is_zero());
        assert_eq!(
            qt_inner(&p(part![1, 1], "1"), &p(part![1, 1], "1")),
            parse("2*(1-q)^2/(1-t)^2").unwrap()
        );
    }

    #[test]
    fn rescaling_examples() {
        let p1 = p(part![1], "1");
        let s = scale_power_sums(&p1, |k| parse(&format!("1-t^{k}")).unwrap());
        assert_eq!(s, p(part![1], "1-t"));
        let p21 = p(part![2, 1], "1");
        let s = scale_power_sums(&p21, |k| parse(&format!("t^{k}-1")).unwrap());
        assert_eq!(s, p(part![2, 1], "(t^2-1)*(t-1)"));
        let f = schur(&part![2, 1]);
        assert_eq!(scale_power_sums(&f, |_| RatFunc::one()), f);
    }

    #[test]
    fn modified_schur_expansion_round_trip() {
        let f = SymFunc::term(Basis::ModifiedSchur, part![2, 1], RatFunc::one());
        let c = to_canonical(&f);
        let back = expand_in_basis(&c, Basis::ModifiedSchur).unwrap();
        assert_eq!(back, f);
    }
}
