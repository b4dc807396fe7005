//! Rational transition data for one homogeneous degree: power sums to monomials and
//! back, and the symmetric-group character table.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::Int;
use crate::partitions::{enumerate, Partition};

pub struct Tables {
    pub d: usize,
    /// `enumerate(d)`; every dense vector of this degree uses this order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub z: Vec<BigInt>,
    /// `p_to_m[l][m]`: coefficient of `m_mu` in `p_lambda`.
    pub p_to_m: Vec<Vec<Int>>,
    /// `m_to_p[l][n]`: coefficient of `p_nu` in `m_lambda`.
    pub m_to_p: Vec<Vec<BigRational>>,
    /// `chi[l][n]`: character of the irreducible `lambda` on cycle type `nu`.
    pub chi: Vec<Vec<Int>>,
}

impl Tables {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Tables>>> {
    static C: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared tables for degree `d`, built on first use.
pub fn tables(d: usize) -> Arc<Tables> {
    if let Some(t) = cache().lock().unwrap().get(&d) {
        return t.clone();
    }
    // built outside the lock: characters recurse into lower degrees
    let t = Arc::new(build(d));
    cache().lock().unwrap().entry(d).or_insert(t).clone()
}

fn build(d: usize) -> Tables {
    let parts = enumerate(d);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = parts.len();
    let z = parts.iter().map(|p| BigInt::from(p.z())).collect();

    let mut p_to_m = vec![vec![Int::ZERO; n]; n];
    for (i, l) in parts.iter().enumerate() {
        let mut cur: HashMap<Partition, Int> = HashMap::from([(Partition::empty(), Int::ONE)]);
        for &k in l.parts() {
            cur = times_power_sum(&cur, k);
        }
        for (mu, c) in cur {
            p_to_m[i][index[&mu]] = c;
        }
    }

    // p_to_m is lower triangular in enumeration order; forward substitution
    let mut m_to_p = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let diag = BigRational::from_integer(p_to_m[i][i].to_big());
        // p_i = sum_{j <= i} A_ij m_j  =>  m_i = (p_i - sum_{j<i} A_ij m_j) / A_ii
        let mut row = vec![BigRational::zero(); n];
        row[i] = BigRational::one();
        for j in 0..i {
            let a = &p_to_m[i][j];
            if a.is_zero() {
                continue;
            }
            let a = BigRational::from_integer(a.to_big());
            for (k, v) in m_to_p[j].iter().enumerate() {
                if !v.is_zero() {
                    row[k] -= &a * v;
                }
            }
        }
        for v in row.iter_mut() {
            *v /= &diag;
        }
        m_to_p[i] = row;
    }

    let chi = parts
        .iter()
        .map(|l| parts.iter().map(|nu| character(l, nu)).collect())
        .collect();

    Tables { d, parts, index, z, p_to_m, m_to_p, chi }
}

/// Multiplies a monomial-basis expansion by `p_k`.
fn times_power_sum(f: &HashMap<Partition, Int>, k: usize) -> HashMap<Partition, Int> {
    let mut out: HashMap<Partition, Int> = HashMap::new();
    for (mu, c) in f {
        let mut seen: Vec<usize> = Vec::new();
        let mut candidates: Vec<usize> = mu.parts().to_vec();
        candidates.push(0);
        for v in candidates {
            if seen.contains(&v) {
                continue;
            }
            seen.push(v);
            let mut parts = mu.parts().to_vec();
            match parts.iter().position(|&x| x == v) {
                Some(pos) => parts[pos] += k,
                None => parts.push(k),
            }
            let nu = Partition::from_unsorted(parts);
            let mult = nu.parts().iter().filter(|&&x| x == v + k).count() as i64;
            let e = out.entry(nu).or_insert(Int::ZERO);
            *e += &(c * &Int::from(mult));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Murnaghan-Nakayama: strip a rim hook of size `nu_1` and recurse through the
/// table one degree down.
fn character(lambda: &Partition, nu: &Partition) -> Int {
    if nu.is_empty() {
        return if lambda.is_empty() { Int::ONE } else { Int::ZERO };
    }
    let k = nu.parts()[0];
    let rest = Partition::new(nu.parts()[1..].to_vec()).unwrap();
    let lower = tables(rest.size());
    let ri = lower.idx(&rest);
    let mut acc = Int::ZERO;
    for (mu, sign) in remove_rim_hooks(lambda, k) {
        let v = &lower.chi[lower.idx(&mu)][ri];
        if sign > 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

/// All `(lambda minus a k-rim-hook, (-1)^height)` via beta numbers.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)).collect();
        out.push((Partition::from_unsorted(parts), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn low_degree_tables() {
        let t = tables(2);
        // p_11 = m_2 + 2 m_11, p_2 = m_2
        assert_eq!(t.p_to_m[t.idx(&part![1, 1])][t.idx(&part![1, 1])], Int::from(2));
        assert_eq!(t.p_to_m[t.idx(&part![1, 1])][t.idx(&part![2])], Int::from(1));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(t.m_to_p[t.idx(&part![1, 1])][t.idx(&part![1, 1])], half);
        assert_eq!(t.m_to_p[t.idx(&part![1, 1])][t.idx(&part![2])], -half);
    }

    #[test]
    fn character_orthogonality() {
        for d in 1..=7 {
            let t = tables(d);
            for a in 0..t.len() {
                for b in 0..t.len() {
                    let mut s = BigRational::zero();
                    for n in 0..t.len() {
                        let x = &t.chi[a][n] * &t.chi[b][n];
                        s += BigRational::new(x.to_big(), t.z[n].clone());
                    }
                    let want = if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(s, want, "d={d}");
                }
            }
            // the identity class carries the dimension
            let ones = t.idx(&Partition::column(d));
            assert!(t.chi.iter().all(|r| r[ones].signum() > 0));
        }
    }
}
