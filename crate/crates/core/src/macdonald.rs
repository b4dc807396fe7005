//! Macdonald polynomials `P_lambda(q, t)` and the families obtained from them.
//!
//! `P` is built from the tableau formula `P_lambda = sum_T psi_T(q, t) x^T`, which only
//! involves nonnegative powers of `q` and `t` and so also works at `q = 0` or `t = 0`.
//! [`gram_schmidt`] is the slow definition, kept to check the fast path.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::{Field, Point, RatFunc};
use crate::error::Result;
use crate::partitions::Partition;
use crate::symfunc::{exact, tables, Basis, Engine, SymFunc};

/// Everything about `P_lambda` for one degree, in `tables(d)` order.
pub struct MacDegree<F> {
    /// `m[l][mu]`: coefficient of `m_mu` in `P_l`.
    pub m: Vec<Vec<F>>,
    /// `p[l][nu]`: coefficient of `p_nu` in `P_l`.
    pub p: Vec<Vec<F>>,
    /// `<P_l, P_l>`.
    pub norm: Vec<F>,
    pub norm_inv: Vec<F>,
}

impl<F: Field> Engine<F> {
    /// `b_lambda(s) = (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l)` for a cell with arm `a`, leg `l`.
    fn b_cell(&self, arm: usize, leg: usize) -> F {
        let (a, l) = (arm as i32, leg as i32);
        let den = self.one_minus(a + 1, l).inv().expect("1 - q^(a+1) t^l vanishes at this point");
        self.one_minus(a, l + 1).mul(&den)
    }

    /// `psi_(lambda/mu)` for a horizontal strip.
    fn psi(&self, lambda: &Partition, mu: &Partition) -> F {
        let lc = lambda.conjugate();
        let mc = mu.conjugate();
        let mut acc = F::one();
        for (row, col, arm, leg) in mu.cells() {
            let row_hit = lambda.part(row - 1) > mu.part(row - 1);
            let col_hit = lc.part(col - 1) > mc.part(col - 1);
            if row_hit && !col_hit {
                let (la, ll) = lambda.arm_leg(row, col).expect("mu inside lambda");
                acc = acc.mul(&self.b_cell(arm, leg)).mul(&self.b_cell(la, ll).inv().expect("b_lambda vanishes"));
            }
        }
        acc
    }

    /// `<P_lambda, P_lambda> = prod_s (1 - q^(a+1) t^l) / (1 - q^a t^(l+1))`.
    pub fn norm_g(&self, lambda: &Partition) -> F {
        let mut acc = F::one();
        for (_, _, a, l) in lambda.cells() {
            acc = acc.mul(&self.b_cell(a, l));
        }
        acc.inv().expect("norm vanishes at this point")
    }

    pub fn mac_degree(&self, d: usize) -> Arc<MacDegree<F>> {
        if let Some(m) = self.mac.lock().unwrap().get(&d) {
            return m.clone();
        }
        let built = Arc::new(self.build_mac(d));
        self.mac.lock().unwrap().entry(d).or_insert(built).clone()
    }

    fn build_mac(&self, d: usize) -> MacDegree<F> {
        let w = self.weights(d);
        let n = w.t.len();
        let mut m = vec![vec![F::zero(); n]; n];
        let mut psi_cache: HashMap<(Partition, Partition), F> = HashMap::new();
        let start: HashMap<Partition, F> = HashMap::from([(Partition::empty(), F::one())]);
        let mut weight = Vec::new();
        self.strip_dfs(d, d, &start, &mut weight, &mut psi_cache, &mut m);

        let mut p = vec![vec![F::zero(); n]; n];
        for l in 0..n {
            for mu in 0..n {
                let c = &m[l][mu];
                if c.is_zero() {
                    continue;
                }
                for (nu, x) in w.m_to_p[mu].iter().enumerate() {
                    if !x.is_zero() {
                        p[l][nu].add_assign(&c.mul(x));
                    }
                }
            }
        }
        let norm: Vec<F> = w.t.parts.iter().map(|l| self.norm_g(l)).collect();
        let norm_inv = norm.iter().map(|x| x.inv().expect("norm vanishes")).collect();
        MacDegree { m, p, norm, norm_inv }
    }

    /// Walks weights `mu` part by part, adding one horizontal strip per part.
    fn strip_dfs(
        &self,
        left: usize,
        max: usize,
        states: &HashMap<Partition, F>,
        weight: &mut Vec<usize>,
        cache: &mut HashMap<(Partition, Partition), F>,
        out: &mut [Vec<F>],
    ) {
        if left == 0 {
            let t = tables(weight.iter().sum());
            let mu = t.idx(&Partition::new(weight.clone()).unwrap());
            for (l, c) in states {
                out[t.idx(l)][mu] = c.clone();
            }
            return;
        }
        for k in (1..=left.min(max)).rev() {
            let mut next: HashMap<Partition, F> = HashMap::new();
            for (nu, c) in states {
                for l in nu.add_horizontal_strip(k) {
                    let key = (l, nu.clone());
                    let psi = match cache.get(&key) {
                        Some(v) => v.clone(),
                        None => {
                            let v = self.psi(&key.0, nu);
                            cache.insert(key.clone(), v.clone());
                            v
                        }
                    };
                    let v = c.mul(&psi);
                    match next.get_mut(&key.0) {
                        Some(e) => e.add_assign(&v),
                        None => {
                            next.insert(key.0, v);
                        }
                    }
                }
            }
            weight.push(k);
            self.strip_dfs(left - k, k, &next, weight, cache, out);
            weight.pop();
        }
    }

    pub(crate) fn macdonald_dense(&self, lambda: &Partition) -> Vec<F> {
        let mac = self.mac_degree(lambda.size());
        mac.p[tables(lambda.size()).idx(lambda)].clone()
    }

    /// The same field at `q = 0`.
    pub fn hl_engine(&self) -> &Engine<F> {
        self.hl.get_or_init(|| Box::new(Engine::new(Point { q_half: F::zero(), t_half: self.pt.t_half.clone() })))
    }

    /// The same field at `q -> 1/q`, `t = 0`.
    pub fn whittaker_engine(&self) -> &Engine<F> {
        self.whittaker.get_or_init(|| {
            let qi = self.pt.q_half.inv().expect("q^(1/2) invertible");
            Box::new(Engine::new(Point { q_half: qi, t_half: F::zero() }))
        })
    }

    pub(crate) fn hall_littlewood_dense(&self, lambda: &Partition) -> Vec<F> {
        self.hl_engine().macdonald_dense(lambda)
    }

    pub(crate) fn q_whittaker_dense(&self, lambda: &Partition) -> Vec<F> {
        let v = self.whittaker_engine().macdonald_dense(lambda);
        let t = tables(lambda.size());
        v.into_iter()
            .zip(&t.parts)
            .map(|(c, nu)| if nu.len() % 2 == 1 { c.neg() } else { c })
            .collect()
    }

    pub(crate) fn dual_hall_littlewood_dense(&self, lambda: &Partition) -> Vec<F> {
        let v = self.q_whittaker_dense(lambda);
        let t = tables(lambda.size());
        v.into_iter()
            .zip(&t.parts)
            .map(|(c, nu)| nu.parts().iter().fold(c, |acc, &k| acc.mul(&self.one_minus(0, k as i32))))
            .collect()
    }

    /// `N^A_(R,B)` for every `A` of size `|R| + |B|`, in `tables` order.
    pub fn lr_column(&self, r: &Partition, b: &Partition) -> Vec<F> {
        let pr = SymFunc::from_dense(Basis::PowerSum, r.size(), &self.macdonald_dense(r));
        let pb = SymFunc::from_dense(Basis::PowerSum, b.size(), &self.macdonald_dense(b));
        let d = r.size() + b.size();
        let prod = pr.multiply(&pb).dense(d);
        self.expand_dense(d, &prod, Basis::Macdonald).expect("Macdonald expansion is diagonal")
    }

    /// `p_k(t^rho q^A) = sum_(i <= l) (t^-i q^(A_i))^k - t^(-k l) / (1 - t^k)`.
    pub fn spec_pk(&self, k: usize, a: &Partition) -> F {
        let k = k as i32;
        let l = a.len() as i32;
        let mut acc = F::zero();
        for (i, &ai) in a.parts().iter().enumerate() {
            acc.add_assign(&self.mono(2 * ai as i32 * k, -2 * (i as i32 + 1) * k));
        }
        let tail = self.mono(0, -2 * k * l).mul(&self.one_minus(0, k).inv().expect("1 - t^k vanishes"));
        acc.sub(&tail)
    }

    /// Evaluates a power-sum expansion at `t^rho q^A`.
    pub fn principal_spec(&self, f: &SymFunc<F>, a: &Partition) -> Result<F> {
        Ok(self.to_canonical(f)?.specialize(|k| self.spec_pk(k, a)))
    }

    /// `p_k -> (1 - t^(-N k)) / (1 - t^(-k))`.
    pub fn topological_locus(&self, f: &SymFunc<F>, n: usize) -> Result<F> {
        let n = n as i32;
        Ok(self.to_canonical(f)?.specialize(|k| {
            let k = k as i32;
            let num = F::one().sub(&self.mono(0, -2 * n * k));
            let den = F::one().sub(&self.mono(0, -2 * k));
            num.mul(&den.inv().expect("1 - t^-k vanishes"))
        }))
    }
}

/// Gram-Schmidt on monomials from the bottom of dominance up; the reference
/// construction for `P` in degree `d`, in `tables(d)` order and the power-sum basis.
pub fn gram_schmidt<F: Field>(eng: &Engine<F>, d: usize) -> Vec<Vec<F>> {
    let w = eng.weights(d);
    let n = w.t.len();
    let mut out: Vec<Vec<F>> = vec![Vec::new(); n];
    let mut norms: Vec<F> = vec![F::zero(); n];
    for l in (0..n).rev() {
        let ml = w.m_to_p[l].clone();
        let mut v = ml.clone();
        for mu in l + 1..n {
            let c = eng.inner_dense(d, &ml, &out[mu]).mul(&norms[mu].inv().expect("isotropic vector"));
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(&out[mu]) {
                *x = x.sub(&c.mul(y));
            }
        }
        norms[l] = eng.inner_dense(d, &v, &v);
        out[l] = v;
    }
    out
}

fn canonical(basis: Basis, lambda: &Partition) -> SymFunc {
    let e = exact().element(basis, lambda).expect("basis element");
    SymFunc::from_dense(Basis::PowerSum, lambda.size(), &e)
}

/// `P_lambda` in power sums.
pub fn macdonald_p(lambda: &Partition) -> SymFunc {
    canonical(Basis::Macdonald, lambda)
}

pub fn norm_g(lambda: &Partition) -> RatFunc {
    exact().norm_g(lambda)
}

/// Coefficient of `P_A` in `P_R P_B`.
pub fn lr_coeff(r: &Partition, b: &Partition, a: &Partition) -> RatFunc {
    if a.size() != r.size() + b.size() {
        return RatFunc::zero();
    }
    exact().lr_column(r, b)[tables(a.size()).idx(a)].clone()
}

pub fn principal_spec(f: &SymFunc, a: &Partition) -> RatFunc {
    exact().principal_spec(f, a).expect("exact specialization")
}

/// `P_lambda(q = 0, t)`.
pub fn hall_littlewood(lambda: &Partition) -> SymFunc {
    canonical(Basis::HallLittlewood, lambda)
}

/// Rescale `p_k` by `t^k - 1`, set `t = 0`, then invert `q`.
pub fn q_whittaker(lambda: &Partition) -> SymFunc {
    canonical(Basis::QWhittaker, lambda)
}

/// [`q_whittaker`] with `p_k` rescaled by `1 - t^k`.
pub fn dual_hall_littlewood(lambda: &Partition) -> SymFunc {
    canonical(Basis::DualHallLittlewood, lambda)
}

pub fn modified_schur(lambda: &Partition) -> SymFunc {
    canonical(Basis::ModifiedSchur, lambda)
}

pub use crate::symfunc::expand_in_basis;

pub fn topological_locus(f: &SymFunc, n: usize) -> RatFunc {
    exact().topological_locus(f, n).expect("exact specialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::expr::parse;
    use crate::part;

    fn r(s: &str) -> RatFunc {
        parse(s).unwrap()
    }

    fn p(terms: &[(Partition, &str)]) -> SymFunc {
        SymFunc::from_terms(Basis::PowerSum, terms.iter().map(|(l, c)| (l.clone(), r(c))))
    }

    #[test]
    fn low_degree_examples() {
        assert_eq!(macdonald_p(&part![1]), p(&[(part![1], "1")]));
        assert_eq!(macdonald_p(&part![1, 1]), p(&[(part![1, 1], "1/2"), (part![2], "-1/2")]));
        assert_eq!(
            macdonald_p(&part![2]),
            p(&[(part![1, 1], "(1+q)*(1-t)/(2*(1-q*t))"), (part![2], "(1-q)*(1+t)/(2*(1-q*t))")])
        );
        assert_eq!(hall_littlewood(&part![2]), p(&[(part![1, 1], "(1-t)/2"), (part![2], "(1+t)/2")]));
        assert_eq!(q_whittaker(&part![]), SymFunc::one());
        assert_eq!(q_whittaker(&part![1]), p(&[(part![1], "-1")]));
        assert_eq!(q_whittaker(&part![2]), p(&[(part![1, 1], "(1+q^-1)/2"), (part![2], "-(1-q^-1)/2")]));
        assert_eq!(modified_schur(&part![1, 1]), p(&[(part![1, 1], "(1-t)/2"), (part![2], "-(1+t)/2")]));
    }

    #[test]
    fn norms_and_lr() {
        assert_eq!(norm_g(&part![]), RatFunc::one());
        assert_eq!(norm_g(&part![1]), r("(1-q)/(1-t)"));
        assert_eq!(norm_g(&part![2]), r("(1-q^2)*(1-q)/((1-q*t)*(1-t))"));
        assert_eq!(lr_coeff(&part![1], &part![1], &part![2]), RatFunc::one());
        assert_eq!(lr_coeff(&part![1], &part![1], &part![1, 1]), r("(1-q)*(1+t)/(1-q*t)"));
        assert_eq!(lr_coeff(&part![2, 1], &part![], &part![2, 1]), RatFunc::one());
        assert!(lr_coeff(&part![2, 1], &part![], &part![3]).is_zero());
        assert!(lr_coeff(&part![1], &part![1], &part![3]).is_zero());
    }

    #[test]
    fn specializations() {
        let p1 = p(&[(part![1], "1")]);
        assert_eq!(principal_spec(&p1, &part![]), r("-1/(1-t)"));
        assert_eq!(principal_spec(&p(&[(part![2], "1")]), &part![1]), r("q^2/t^2 - t^-2/(1-t^2)"));
        assert_eq!(topological_locus(&p1, 2), r("1+t^-1"));
        assert_eq!(topological_locus(&SymFunc::one(), 5), RatFunc::one());
        assert_eq!(topological_locus(&macdonald_p(&part![1]), 3), r("1+t^-1+t^-2"));
    }

    #[test]
    fn hl_in_macdonald_basis() {
        let e = expand_in_basis(&hall_littlewood(&part![2]), Basis::Macdonald).unwrap();
        let want = SymFunc::from_terms(
            Basis::Macdonald,
            [(part![2], RatFunc::one()), (part![1, 1], r("q*(t^2-1)/(1-q*t)"))],
        );
        assert_eq!(e, want);
    }

    #[test]
    fn tableau_matches_gram_schmidt() {
        for d in 1..=5 {
            let gs = gram_schmidt(exact(), d);
            let tab = exact().mac_degree(d);
            assert_eq!(gs, tab.p, "d={d}");
            for (i, v) in gs.iter().enumerate() {
                assert_eq!(exact().inner_dense(d, v, v), tab.norm[i]);
            }
        }
    }
}
