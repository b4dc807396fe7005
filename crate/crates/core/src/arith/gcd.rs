//! Polynomial gcd and exact division for bivariate Laurent polynomials.
//!
//! The working path is Brown's dense modular algorithm: images modulo word-size
//! primes are computed by evaluation in one variable plus Euclid in the other,
//! interpolated, lifted by CRT and accepted only after trial division over Z.
//! [`gcd_reference`] is the primitive-remainder-sequence algorithm over Z[y][x]
//! and exists to cross-check the modular path.

use num_bigint::BigInt;

use super::int::{symmetric_lift, Int};
use super::poly::{gcd_i32, LaurentPoly, Mono};
use super::zp::{self, UPoly};

/// Dense polynomial over Z in (x, y): `rows[i]` holds the y-coefficients of x^i.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense {
    pub rows: Vec<Vec<Int>>,
}

fn trim_int(v: &mut Vec<Int>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Dense {
    fn trim(&mut self) {
        for r in &mut self.rows {
            trim_int(r);
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(1).saturating_sub(1)
    }

    fn lead(&self) -> &Int {
        self.rows.last().unwrap().last().unwrap()
    }

    fn is_constant(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].len() == 1
    }

    fn reduce(&self, p: u64) -> Vec<UPoly> {
        let mut out: Vec<UPoly> = self
            .rows
            .iter()
            .map(|r| {
                let mut v: UPoly = r.iter().map(|c| c.mod_u64(p)).collect();
                zp::trim(&mut v);
                v
            })
            .collect();
        while out.last().is_some_and(|r| r.is_empty()) {
            out.pop();
        }
        out
    }

    fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for r in &self.rows {
            for c in r {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    fn div_int(&self, c: &Int) -> Dense {
        Dense {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.div_exact(c)).collect())
                .collect(),
        }
    }
}

/// How a Laurent polynomial pair is laid out densely.
#[derive(Clone, Copy, Debug)]
struct Layout {
    shift_a: Mono,
    shift_b: Mono,
    step_q: i32,
    step_t: i32,
    x_is_q: bool,
}

impl Layout {
    fn new(a: &LaurentPoly, b: &LaurentPoly) -> Layout {
        let sa = a.min_exps().unwrap();
        let sb = b.min_exps().unwrap();
        let mut gq = 0;
        let mut gt = 0;
        for (p, s) in [(a, sa), (b, sb)] {
            for ((x, y), _) in p.terms() {
                gq = gcd_i32(gq, x - s.0);
                gt = gcd_i32(gt, y - s.1);
            }
        }
        let step_q = if gq == 0 { 1 } else { gq };
        let step_t = if gt == 0 { 1 } else { gt };
        let dq = |p: &LaurentPoly, s: Mono| (p.max_exps().unwrap().0 - s.0) / step_q;
        let dt = |p: &LaurentPoly, s: Mono| (p.max_exps().unwrap().1 - s.1) / step_t;
        let deg_q = dq(a, sa).max(dq(b, sb));
        let deg_t = dt(a, sa).max(dt(b, sb));
        // x carries the smaller degree unless a variable is absent altogether.
        let x_is_q = if deg_t == 0 {
            true
        } else if deg_q == 0 {
            false
        } else {
            deg_q <= deg_t
        };
        Layout { shift_a: sa, shift_b: sb, step_q, step_t, x_is_q }
    }

    fn to_dense(&self, p: &LaurentPoly, s: Mono) -> Dense {
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for ((a, b), c) in p.terms() {
            let i = ((a - s.0) / self.step_q) as usize;
            let j = ((b - s.1) / self.step_t) as usize;
            let (x, y) = if self.x_is_q { (i, j) } else { (j, i) };
            if rows.len() <= x {
                rows.resize(x + 1, Vec::new());
            }
            let r = &mut rows[x];
            if r.len() <= y {
                r.resize(y + 1, Int::ZERO);
            }
            r[y] = c.clone();
        }
        let mut d = Dense { rows };
        d.trim();
        d
    }

    fn from_dense(&self, d: &Dense, s: Mono) -> LaurentPoly {
        let mut terms = Vec::new();
        for (x, r) in d.rows.iter().enumerate() {
            for (y, c) in r.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, j) = if self.x_is_q { (x, y) } else { (y, x) };
                terms.push((
                    (i as i32 * self.step_q + s.0, j as i32 * self.step_t + s.1),
                    c.clone(),
                ));
            }
        }
        LaurentPoly::from_terms(terms)
    }
}

/// Normalizes a gcd: lowest exponents zero, first coefficient positive.
fn normalize_unit(p: LaurentPoly) -> LaurentPoly {
    let m = p.min_exps().unwrap();
    let p = p.shift((-m.0, -m.1));
    if p.first_coeff().unwrap().is_negative() {
        -&p
    } else {
        p
    }
}

/// Greatest common divisor up to units, normalized to nonnegative exponents with
/// positive first coefficient (in `Mono` order). Integer content is included.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return if b.is_zero() { LaurentPoly::zero() } else { normalize_unit(b.clone()) };
    }
    if b.is_zero() {
        return normalize_unit(a.clone());
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::constant(c);
    }
    let pa = a.div_int_exact(&ca);
    let pb = b.div_int_exact(&cb);
    if pa == pb || pa == -&pb {
        return normalize_unit(pa.scale(&c));
    }
    let lay = Layout::new(&pa, &pb);
    let da = lay.to_dense(&pa, lay.shift_a);
    let db = lay.to_dense(&pb, lay.shift_b);
    let g = modular_gcd(&da, &db);
    if g.is_constant() {
        return LaurentPoly::constant(c);
    }
    normalize_unit(lay.from_dense(&g, (0, 0)).scale(&c))
}

/// Exact quotient `a / b` in the Laurent ring, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if b.is_monomial() {
        let (m, c) = &b.terms()[0];
        let mut terms = Vec::with_capacity(a.len());
        for ((x, y), d) in a.terms() {
            terms.push(((x - m.0, y - m.1), d.checked_div(c)?));
        }
        return Some(LaurentPoly::from_sorted_unchecked(terms));
    }
    if a == b {
        return Some(LaurentPoly::one());
    }
    let lay = Layout::new(a, b);
    let da = lay.to_dense(a, lay.shift_a);
    let db = lay.to_dense(b, lay.shift_b);
    let q = dense_div_exact(&da, &db)?;
    let s = (lay.shift_a.0 - lay.shift_b.0, lay.shift_a.1 - lay.shift_b.1);
    Some(lay.from_dense(&q, s))
}

// ---------------------------------------------------------------------------
// Univariate helpers over Z.

fn zpoly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let p = x * y;
            out[i + j] += &p;
        }
    }
    trim_int(&mut out);
    out
}

fn zpoly_sub_assign(a: &mut Vec<Int>, b: &[Int]) {
    if a.len() < b.len() {
        a.resize(b.len(), Int::ZERO);
    }
    for (i, y) in b.iter().enumerate() {
        a[i] -= y;
    }
    trim_int(a);
}

/// Exact univariate quotient over Z.
fn zpoly_div_exact(a: &[Int], b: &[Int]) -> Option<Vec<Int>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![Int::ZERO; a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let c = top.checked_div(lc)?;
        for j in 0..=db {
            let p = &c * &b[j];
            r[k + j] -= &p;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim_int(&mut q);
    Some(q)
}

fn dense_div_exact(a: &Dense, b: &Dense) -> Option<Dense> {
    if a.is_zero() {
        return Some(Dense { rows: Vec::new() });
    }
    if a.rows.len() < b.rows.len() {
        return None;
    }
    if a.deg_y() < b.deg_y() {
        return None;
    }
    let dbx = b.rows.len() - 1;
    let lc = &b.rows[dbx];
    let mut r = a.rows.clone();
    let mut q = vec![Vec::new(); a.rows.len() - dbx];
    for k in (0..q.len()).rev() {
        if r[k + dbx].is_empty() {
            continue;
        }
        let c = zpoly_div_exact(&r[k + dbx], lc)?;
        for j in 0..=dbx {
            let p = zpoly_mul(&c, &b.rows[j]);
            zpoly_sub_assign(&mut r[k + j], &p);
        }
        q[k] = c;
    }
    if r.iter().any(|row| !row.is_empty()) {
        return None;
    }
    let mut d = Dense { rows: q };
    d.trim();
    Some(d)
}

// ---------------------------------------------------------------------------
// Modular algorithm.

type ZpDense = Vec<UPoly>;

fn zp_content(a: &ZpDense, p: u64) -> UPoly {
    let mut g: UPoly = Vec::new();
    for r in a {
        if r.is_empty() {
            continue;
        }
        g = if g.is_empty() { zp::make_monic(r, p) } else { zp::gcd(&g, r, p) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn zp_div_rows(a: &ZpDense, c: &UPoly, p: u64) -> ZpDense {
    if c.len() == 1 {
        let inv = zp::invmod(c[0], p).unwrap();
        return a.iter().map(|r| zp::scale(r, inv, p)).collect();
    }
    a.iter()
        .map(|r| {
            if r.is_empty() {
                Vec::new()
            } else {
                let (q, rem) = zp::divrem(r, c, p);
                debug_assert!(rem.is_empty());
                q
            }
        })
        .collect()
}

fn zp_deg_y(a: &ZpDense) -> usize {
    a.iter().map(|r| r.len()).max().unwrap_or(1).saturating_sub(1)
}

/// Whether `d` divides `a` in Z/p[y][x].
fn zp_divides(a: &ZpDense, d: &ZpDense, p: u64) -> bool {
    if a.is_empty() {
        return true;
    }
    if a.len() < d.len() {
        return false;
    }
    let dx = d.len() - 1;
    let lc = &d[dx];
    let mut r = a.clone();
    for k in (0..=a.len() - d.len()).rev() {
        if r[k + dx].is_empty() {
            continue;
        }
        let (c, rem) = zp::divrem(&r[k + dx], lc, p);
        if !rem.is_empty() {
            return false;
        }
        for j in 0..=dx {
            let prod = zp::mul(&c, &d[j], p);
            r[k + j] = zp::sub(&r[k + j], &prod, p);
        }
    }
    r.iter().all(|row| row.is_empty())
}

/// Monic (in lex order, x first) gcd over Z/p in two variables.
fn zp_gcd2(a: &ZpDense, b: &ZpDense, p: u64) -> ZpDense {
    let ca = zp_content(a, p);
    let cb = zp_content(b, p);
    let c = zp::gcd(&ca, &cb, p);
    let a = zp_div_rows(a, &ca, p);
    let b = zp_div_rows(b, &cb, p);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let lca = a.last().unwrap();
    let lcb = b.last().unwrap();
    let g = zp::gcd(lca, lcb, p);
    let bound = zp::degree(&g) as usize + zp_deg_y(&a).min(zp_deg_y(&b));
    let mut n = a.len().min(b.len()) - 1;
    let mut h: ZpDense = Vec::new();
    let mut modulus: UPoly = vec![1];
    let mut beta: u64 = 1;
    loop {
        beta += 1;
        let la = zp::eval(lca, beta, p);
        let lb = zp::eval(lcb, beta, p);
        if la == 0 || lb == 0 {
            continue;
        }
        let ea: UPoly = {
            let mut v: UPoly = a.iter().map(|r| zp::eval(r, beta, p)).collect();
            zp::trim(&mut v);
            v
        };
        let eb: UPoly = {
            let mut v: UPoly = b.iter().map(|r| zp::eval(r, beta, p)).collect();
            zp::trim(&mut v);
            v
        };
        let img = zp::gcd(&ea, &eb, p);
        let e = img.len() - 1;
        if e == 0 {
            return vec![c];
        }
        if e > n {
            continue;
        }
        if e < n || h.is_empty() {
            n = e;
            h = Vec::new();
            modulus = vec![1];
        }
        let img = zp::scale(&img, zp::eval(&g, beta, p), p);
        if h.is_empty() {
            h = img.iter().map(|&v| if v == 0 { Vec::new() } else { vec![v] }).collect();
        } else {
            let mval = zp::eval(&modulus, beta, p);
            let minv = zp::invmod(mval, p).unwrap();
            for (i, row) in h.iter_mut().enumerate() {
                let cur = zp::eval(row, beta, p);
                let want = *img.get(i).unwrap_or(&0);
                let delta = zp::mulmod(zp::submod(want, cur, p), minv, p);
                if delta != 0 {
                    let corr = zp::scale(&modulus, delta, p);
                    *row = zp::add(row, &corr, p);
                }
            }
        }
        modulus = zp::mul(&modulus, &vec![p - (beta % p), 1], p);
        if modulus.len() - 1 > bound {
            let hc = zp_content(&h, p);
            let mut pp = zp_div_rows(&h, &hc, p);
            let lead = *pp.last().unwrap().last().unwrap();
            let inv = zp::invmod(lead, p).unwrap();
            for r in pp.iter_mut() {
                *r = zp::scale(r, inv, p);
            }
            if zp_divides(&a, &pp, p) && zp_divides(&b, &pp, p) {
                return pp.iter().map(|r| zp::mul(r, &c, p)).collect();
            }
            // an unlucky evaluation slipped in; start over with fresh points
            h = Vec::new();
            modulus = vec![1];
            n = a.len().min(b.len()) - 1;
        }
    }
}

fn modular_gcd(a: &Dense, b: &Dense) -> Dense {
    let gamma = a.lead().gcd(b.lead());
    let mut acc: Option<(Vec<Vec<BigInt>>, BigInt, (usize, usize))> = None;
    let mut last_lift: Option<Dense> = None;
    for p in zp::large_primes() {
        if a.lead().mod_u64(p) == 0 || b.lead().mod_u64(p) == 0 {
            continue;
        }
        let g = zp_gcd2(&a.reduce(p), &b.reduce(p), p);
        if g.len() == 1 && g[0].len() == 1 {
            return Dense { rows: vec![vec![Int::ONE]] };
        }
        let shape = (g.len() - 1, zp_deg_y(&g));
        let gm = gamma.mod_u64(p);
        let img: Vec<Vec<u64>> = g
            .iter()
            .map(|r| {
                let mut v: Vec<u64> = r.iter().map(|&x| zp::mulmod(x, gm, p)).collect();
                v.resize(shape.1 + 1, 0);
                v
            })
            .collect();
        match &mut acc {
            Some((_, _, s)) if shape.0 > s.0 || shape.1 > s.1 => continue,
            Some((_, _, s)) if shape != *s => {
                acc = None;
                last_lift = None;
            }
            _ => {}
        }
        let pb = BigInt::from(p);
        acc = Some(match acc.take() {
            None => (
                img.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
                pb,
                shape,
            ),
            Some((h, m, s)) => {
                // x = h + m * ((img - h) * m^{-1} mod p)
                let minv = zp::invmod(num_traits::ToPrimitive::to_u64(&(&m % &pb)).unwrap(), p)
                    .unwrap();
                let newh = h
                    .iter()
                    .zip(img.iter())
                    .map(|(hr, ir)| {
                        hr.iter()
                            .zip(ir.iter())
                            .map(|(hv, &iv)| {
                                let hm = Int::from_big(hv.clone()).mod_u64(p);
                                let d = zp::mulmod(zp::submod(iv, hm, p), minv, p);
                                hv + &m * BigInt::from(d)
                            })
                            .collect()
                    })
                    .collect();
                (newh, &m * &pb, s)
            }
        });
        let (h, m, _) = acc.as_ref().unwrap();
        let mut lift = Dense {
            rows: h
                .iter()
                .map(|r| r.iter().map(|v| Int::from_big(symmetric_lift(v, m))).collect())
                .collect(),
        };
        lift.trim();
        if last_lift.as_ref() == Some(&lift) {
            let cont = lift.content();
            let cand = if cont.is_one() { lift.clone() } else { lift.div_int(&cont) };
            if dense_div_exact(a, &cand).is_some() && dense_div_exact(b, &cand).is_some() {
                return cand;
            }
        }
        last_lift = Some(lift);
    }
    unreachable!("prime supply exhausted")
}

// ---------------------------------------------------------------------------
// Reference algorithm: primitive PRS over Z[y][x].

fn zpoly_content(a: &[Int]) -> Int {
    let mut g = Int::ZERO;
    for c in a {
        g = g.gcd(c);
    }
    g
}

fn zpoly_rem_pseudo(a: &[Int], b: &[Int]) -> Vec<Int> {
    // lc(b)^k * a mod b
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let top = r[r.len() - 1].clone();
        r = r.iter().map(|c| c * lc).collect();
        for j in 0..=db {
            let p = &top * &b[j];
            r[k + j] -= &p;
        }
        trim_int(&mut r);
    }
    r
}

fn zpoly_primitive(a: &[Int]) -> Vec<Int> {
    let c = zpoly_content(a);
    let mut v: Vec<Int> = a.iter().map(|x| x.div_exact(&c)).collect();
    if v.last().is_some_and(|x| x.is_negative()) {
        v = v.iter().map(|x| -x).collect();
    }
    v
}

/// Gcd in Z[y], positive leading coefficient.
fn zpoly_gcd(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() {
        return if b.is_empty() { Vec::new() } else { zpoly_normal(b) };
    }
    if b.is_empty() {
        return zpoly_normal(a);
    }
    let c = zpoly_content(a).gcd(&zpoly_content(b));
    let (mut u, mut v) = (zpoly_primitive(a), zpoly_primitive(b));
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = zpoly_rem_pseudo(&u, &v);
        u = v;
        v = if r.is_empty() { r } else { zpoly_primitive(&r) };
    }
    u.iter().map(|x| x * &c).collect()
}

fn zpoly_normal(a: &[Int]) -> Vec<Int> {
    if a.last().is_some_and(|x| x.is_negative()) {
        a.iter().map(|x| -x).collect()
    } else {
        a.to_vec()
    }
}

fn dense_content_y(a: &Dense) -> Vec<Int> {
    let mut g: Vec<Int> = Vec::new();
    for r in &a.rows {
        g = zpoly_gcd(&g, r);
    }
    g
}

fn dense_div_row(a: &Dense, c: &[Int]) -> Dense {
    Dense { rows: a.rows.iter().map(|r| zpoly_div_exact(r, c).unwrap()).collect() }
}

fn dense_prem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.rows.clone();
    let db = b.rows.len() - 1;
    let lc = &b.rows[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let top = r[r.len() - 1].clone();
        r = r.iter().map(|c| zpoly_mul(c, lc)).collect();
        for j in 0..=db {
            let p = zpoly_mul(&top, &b.rows[j]);
            zpoly_sub_assign(&mut r[k + j], &p);
        }
        while r.last().is_some_and(|x| x.is_empty()) {
            r.pop();
        }
    }
    Dense { rows: r }
}

/// Reference gcd by primitive pseudo-remainder sequences, same normalization as [`gcd`].
pub fn gcd_reference(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() || a.is_monomial() || b.is_monomial() {
        return gcd(a, b);
    }
    let lay = Layout::new(a, b);
    let lay = Layout { x_is_q: true, ..lay };
    let da = lay.to_dense(a, lay.shift_a);
    let db = lay.to_dense(b, lay.shift_b);
    let ca = dense_content_y(&da);
    let cb = dense_content_y(&db);
    let c = zpoly_gcd(&ca, &cb);
    let mut u = dense_div_row(&da, &ca);
    let mut v = dense_div_row(&db, &cb);
    if u.rows.len() < v.rows.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_zero() {
        let r = dense_prem(&u, &v);
        u = v;
        v = if r.is_zero() {
            r
        } else {
            let cr = dense_content_y(&r);
            dense_div_row(&r, &cr)
        };
    }
    let g = Dense { rows: u.rows.iter().map(|r| zpoly_mul(r, &c)).collect() };
    normalize_unit(lay.from_dense(&g, (0, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(m, c)| (m, Int::from(c))))
    }

    #[test]
    fn simple_common_factor() {
        // (1 - q t)(1 + t) and (1 - q t)(1 - q)
        let f = p(&[((0, 0), 1), ((2, 2), -1)]);
        let a = &f * &p(&[((0, 0), 1), ((0, 2), 1)]);
        let b = &f * &p(&[((0, 0), 1), ((2, 0), -1)]);
        assert_eq!(gcd(&a, &b), f);
        assert_eq!(gcd_reference(&a, &b), f);
        assert_eq!(div_exact(&a, &f).unwrap(), p(&[((0, 0), 1), ((0, 2), 1)]));
    }

    #[test]
    fn content_and_units() {
        let a = p(&[((-3, 1), 6), ((1, 1), -3)]);
        let b = p(&[((5, 0), 9)]);
        assert_eq!(gcd(&a, &b), LaurentPoly::constant(Int::from(3)));
        let c = p(&[((0, 0), 2), ((4, 0), -2)]);
        let d = p(&[((0, 2), 4), ((4, 2), -4)]);
        assert_eq!(gcd(&c, &d), p(&[((0, 0), 2), ((4, 0), -2)]));
    }

    #[test]
    fn univariate_t() {
        // (1 - t^3) and (1 - t^2) share (1 - t)
        let a = p(&[((0, 0), 1), ((0, 6), -1)]);
        let b = p(&[((0, 0), 1), ((0, 4), -1)]);
        assert_eq!(gcd(&a, &b), p(&[((0, 0), 1), ((0, 2), -1)]));
        assert!(div_exact(&a, &b).is_none());
    }
}
