//! Recovering integer polynomial amplitudes from modular evaluations.
//!
//! The Γ recursion at degree 10-12 is too heavy for exact rational-function
//! elimination, but the normalized `S~` coefficients are small-integer polynomials in
//! `q` and `tau = 1/t`. We evaluate at points of `Z/p`, find the degree in each
//! variable by Newton interpolation that stops once new points stop changing the
//! interpolant, interpolate on a grid, lift the coefficients to integers, and check
//! the result at fresh points modulo a second prime.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{amplitude_recursion_in, GammaTable, Normalization};
use crate::arith::{Field, Fp, Int, LaurentPoly, Point, RatFunc, PRIME_A, PRIME_B};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{tables, Basis, Engine};

type Fa = Fp<PRIME_A>;

/// Something that can be evaluated in any field at a given `q^(1/2)`, `t^(1/2)`.
pub trait ModularEval {
    /// Number of output coefficients.
    fn len(&self) -> usize;
    fn eval<F: Field>(&self, eng: &Engine<F>) -> Result<Vec<F>>;
}

/// The recursion amplitude `|P^(n,m)_R>` in `S~` with leading-row normalization.
pub struct RecursionTable {
    pub rep: Partition,
    pub n: i64,
    pub m: i64,
}

impl ModularEval for RecursionTable {
    fn len(&self) -> usize {
        tables(self.n as usize * self.rep.size()).len()
    }

    fn eval<F: Field>(&self, eng: &Engine<F>) -> Result<Vec<F>> {
        let mut tab = GammaTable::new(eng, self.rep.clone());
        let amp = amplitude_recursion_in(&mut tab, self.n, self.m)?;
        let s = amp.render(eng, Basis::ModifiedSchur, Normalization::LeadingRow)?;
        Ok(s.coeffs.dense_in(amp.degree()))
    }
}

/// Newton interpolation of many values at once.
struct Newton {
    nodes: Vec<Fa>,
    coeffs: Vec<Vec<Fa>>,
}

impl Newton {
    fn new() -> Self {
        Newton { nodes: Vec::new(), coeffs: Vec::new() }
    }

    /// Adds a node; returns whether the previous interpolant already matched.
    fn push(&mut self, x: Fa, vals: Vec<Fa>) -> bool {
        let mut w = vals;
        for (j, xj) in self.nodes.iter().enumerate() {
            let inv = x.sub(xj).inv().expect("distinct nodes");
            for (wi, cj) in w.iter_mut().zip(&self.coeffs[j]) {
                *wi = wi.sub(cj).mul(&inv);
            }
        }
        let hit = !self.nodes.is_empty() && w.iter().all(|v| v.is_zero());
        self.nodes.push(x);
        self.coeffs.push(w);
        hit
    }

    /// Monomial coefficients, lowest first, for every value slot.
    fn monomial(&self) -> Vec<Vec<Fa>> {
        let k = self.nodes.len();
        let width = self.coeffs.first().map_or(0, |c| c.len());
        (0..width)
            .map(|s| {
                let mut poly: Vec<Fa> = Vec::new();
                for j in (0..k).rev() {
                    // poly = poly * (x - x_j) + c_j
                    let mut next = vec![Fa::zero(); poly.len() + 1];
                    for (i, p) in poly.iter().enumerate() {
                        next[i + 1] = next[i + 1].add(p);
                        next[i] = next[i].sub(&p.mul(&self.nodes[j]));
                    }
                    next[0] = next[0].add(&self.coeffs[j][s]);
                    poly = next;
                }
                poly
            })
            .collect()
    }
}

/// Bound on the number of interpolation nodes per variable.
const MAX_NODES: usize = 160;
/// Consecutive agreeing nodes needed to accept a degree.
const STABLE: usize = 3;

struct Sampler<'a, E: ModularEval> {
    e: &'a E,
    rng: StdRng,
}

impl<E: ModularEval> Sampler<'_, E> {
    fn half(&mut self) -> u64 {
        self.rng.gen_range(1u64 << 20..1u64 << 60)
    }

    fn at<const P: u64>(&self, qh: u64, th: u64) -> Result<Vec<Fp<P>>> {
        let eng = Engine::new(Point { q_half: Fp::<P>::new(qh), t_half: Fp::<P>::new(th) });
        self.e.eval(&eng)
    }

    /// Degree in one variable with the other fixed; `vary_q` picks which.
    fn degree(&mut self, vary_q: bool) -> Result<usize> {
        let fixed = self.half();
        let mut nw = Newton::new();
        let mut run = 0;
        while nw.nodes.len() < MAX_NODES {
            let h = self.half();
            let (qh, th) = if vary_q { (h, fixed) } else { (fixed, h) };
            let x = node(h, vary_q);
            if nw.nodes.contains(&x) {
                continue;
            }
            let v = self.at::<PRIME_A>(qh, th)?;
            run = if nw.push(x, v) { run + 1 } else { 0 };
            if run == STABLE {
                return Ok(nw.nodes.len() - 1 - STABLE);
            }
        }
        Err(Error::Data(format!("degree did not stabilize within {MAX_NODES} nodes")))
    }
}

/// The interpolation variable: `q = h^2` or `tau = h^-2`.
fn node(h: u64, is_q: bool) -> Fa {
    let x = Fa::new(h).mul(&Fa::new(h));
    if is_q {
        x
    } else {
        x.inv().expect("nonzero")
    }
}

fn lift(x: &Fa) -> Result<i64> {
    let v = x.signed();
    if v.unsigned_abs() > 1u128 << 40 {
        return Err(Error::Data("reconstructed coefficient out of range".into()));
    }
    Ok(v as i64)
}

/// Integer polynomial in `q`, `tau`: `coeffs[a][b]` multiplies `q^a tau^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTauPoly(pub Vec<Vec<i64>>);

impl QTauPoly {
    pub fn to_ratfunc(&self) -> RatFunc {
        let terms = self.0.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(move |(b, c)| ((2 * a as i32, -2 * b as i32), Int::from(*c)))
        });
        RatFunc::from_poly(LaurentPoly::from_terms(terms))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().flatten().all(|c| *c >= 0)
    }

    fn eval<const P: u64>(&self, q: Fp<P>, tau: Fp<P>) -> Fp<P> {
        let mut acc = Fp::<P>::zero();
        let mut qa = Fp::<P>::one();
        for row in &self.0 {
            let mut tb = qa;
            for c in row {
                acc = acc.add(&Fp::<P>::from_i64(*c).mul(&tb));
                tb = tb.mul(&tau);
            }
            qa = qa.mul(&q);
        }
        acc
    }
}

/// Recovers every output slot of `e` as an integer polynomial in `q`, `tau`.
pub fn reconstruct<E: ModularEval>(e: &E, seed: u64) -> Result<Vec<QTauPoly>> {
    let mut s = Sampler { e, rng: StdRng::seed_from_u64(seed) };
    let dq = s.degree(true)?;
    let dt = s.degree(false)?;

    let mut qh: Vec<u64> = Vec::new();
    while qh.len() <= dq {
        let h = s.half();
        if !qh.iter().any(|&x| node(x, true) == node(h, true)) {
            qh.push(h);
        }
    }
    let mut th: Vec<u64> = Vec::new();
    while th.len() <= dt {
        let h = s.half();
        if !th.iter().any(|&x| node(x, false) == node(h, false)) {
            th.push(h);
        }
    }

    // for each tau node, interpolate in q; then interpolate each q-coefficient in tau
    let width = e.len();
    let mut by_tau: Vec<Vec<Vec<Fa>>> = Vec::with_capacity(th.len());
    for &t in &th {
        let mut nw = Newton::new();
        for &q in &qh {
            nw.push(node(q, true), s.at::<PRIME_A>(q, t)?);
        }
        by_tau.push(nw.monomial());
    }
    let mut out = Vec::with_capacity(width);
    for slot in 0..width {
        let mut rows = vec![vec![0i64; dt + 1]; dq + 1];
        for (a, row) in rows.iter_mut().enumerate() {
            let mut nw = Newton::new();
            for (j, &t) in th.iter().enumerate() {
                let v = by_tau[j][slot].get(a).copied().unwrap_or_else(Fa::zero);
                nw.push(node(t, false), vec![v]);
            }
            let coeffs = nw.monomial().remove(0);
            for (b, c) in coeffs.iter().enumerate() {
                row[b] = lift(c)?;
            }
        }
        while rows.len() > 1 && rows.last().is_some_and(|r| r.iter().all(|c| *c == 0)) {
            rows.pop();
        }
        for r in rows.iter_mut() {
            while r.len() > 1 && r.last() == Some(&0) {
                r.pop();
            }
        }
        out.push(QTauPoly(rows));
    }

    for _ in 0..2 {
        let (q, t) = (s.half(), s.half());
        let vals = s.at::<PRIME_B>(q, t)?;
        let qv = Fp::<PRIME_B>::new(q).mul(&Fp::<PRIME_B>::new(q));
        let tv = Fp::<PRIME_B>::new(t).mul(&Fp::<PRIME_B>::new(t)).inv().expect("nonzero");
        for (p, v) in out.iter().zip(&vals) {
            if p.eval(qv, tv) != *v {
                return Err(Error::Data("reconstruction disagrees with a check point".into()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn trefoil_fundamental_is_a_single_term() {
        let t = RecursionTable { rep: part![1], n: 2, m: 1 };
        let polys = reconstruct(&t, 7).unwrap();
        let parts = tables(2).parts.clone();
        let i2 = parts.iter().position(|p| *p == part![2]).unwrap();
        assert_eq!(polys[i2], QTauPoly(vec![vec![1]]));
        assert!(polys.iter().enumerate().all(|(i, p)| i == i2 || p.0 == vec![vec![0]]));
    }

    #[test]
    fn mixed_shape_matches_exact_route() {
        let t = RecursionTable { rep: part![2, 1], n: 2, m: 1 };
        let polys = reconstruct(&t, 11).unwrap();
        // the [5,1] coefficient is q + tau
        let i = tables(6).idx(&part![5, 1]);
        assert_eq!(polys[i], QTauPoly(vec![vec![0, 1], vec![1]]));
        assert!(polys.iter().all(QTauPoly::is_nonnegative));
    }
}
