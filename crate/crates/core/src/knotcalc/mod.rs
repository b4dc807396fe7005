//! Torus-knot Γ-factors from the `S` and `T` moves, and the amplitudes built from them.
//!
//! `Γ^(n,m)_(A,B)` is computed column by column: a column is the dense vector of
//! entries `A` with `|A| = |B| + n|R|` for a fixed `B`. A `T` move rescales a column by
//! framing eigenvalues; an `S` move solves one square linear system whose right-hand
//! side is built from columns of the `(m, -n)` knot.

pub mod normalized;
pub mod reconstruct;
pub mod solve;
mod theorems;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{Field, Fp, Point, RatFunc, PRIME_A};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{exact, tables, Basis, Engine, SymFunc};

pub use theorems::{check_overdetermined, compare_routes, RouteComparison, verify_theorem_41, verify_theorem_42, Verdict};

/// Orientation of the framing move: a `T` step multiplies `Γ_(A,B)` by
/// `(T_A / T_B)^SIGMA`.
pub const SIGMA: i32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// `(a, b) -> (a, b + k a)`.
    TPow(i64),
    /// `(a, b) -> (-b, a)`, the inverse of the descent step `(n, m) -> (m, -n)`.
    SSwap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePlan {
    pub n: i64,
    pub m: i64,
    /// Forward order, starting from `(1, 0)`.
    pub moves: Vec<Move>,
}

impl MovePlan {
    /// Replays the moves from `(1, 0)`.
    pub fn replay(&self) -> (i64, i64) {
        let (mut a, mut b) = (1i64, 0i64);
        for mv in &self.moves {
            match *mv {
                Move::TPow(k) => b += k * a,
                Move::SSwap => (a, b) = (-b, a),
            }
        }
        (a, b)
    }

    /// The descent `(n, m) -> ... -> (1, 0)` visited by the plan.
    pub fn descent(&self) -> Vec<(i64, i64)> {
        let mut pts = vec![(1i64, 0i64)];
        let (mut a, mut b) = (1i64, 0i64);
        for mv in &self.moves {
            match *mv {
                Move::TPow(k) => b += k * a,
                Move::SSwap => (a, b) = (-b, a),
            }
            pts.push((a, b));
        }
        pts.reverse();
        pts
    }
}

pub fn check_knot(n: i64, m: i64) -> Result<()> {
    if n.gcd(&m) != 1 {
        return Err(Error::NotAKnot { n, m });
    }
    if n <= 0 {
        return Err(Error::Domain(format!("winding n must be positive, got {n}")));
    }
    Ok(())
}

pub fn plan_moves(n: i64, m: i64) -> Result<MovePlan> {
    check_knot(n, m)?;
    let mut rev = Vec::new();
    let (mut a, mut b) = (n, m);
    loop {
        if a == 1 {
            if b != 0 {
                rev.push(Move::TPow(b));
            }
            break;
        }
        let r = b.rem_euclid(a);
        let k = (b - r) / a;
        if k != 0 {
            rev.push(Move::TPow(k));
        }
        rev.push(Move::SSwap);
        (a, b) = (r, -a);
    }
    rev.reverse();
    Ok(MovePlan { n, m, moves: rev })
}

/// `‖Y‖ = sum of squared parts`, as i32.
fn sq(y: &Partition) -> i32 {
    y.sq_norm() as i32
}

impl<F: Field> Engine<F> {
    /// `T_Y = t^(‖Y^T‖/2) q^(-‖Y‖/2)`.
    pub fn t_eigen(&self, y: &Partition) -> F {
        self.mono(-sq(y), sq(&y.conjugate()))
    }

    /// `(T_A / T_B)^e`.
    pub fn t_ratio(&self, a: &Partition, b: &Partition, e: i32) -> F {
        self.mono(e * (sq(b) - sq(a)), e * (sq(&a.conjugate()) - sq(&b.conjugate())))
    }
}

/// Memoized Γ columns for one colour `R`, plus the `S`-matrix data they share.
pub struct GammaTable<'e, F: Field> {
    eng: &'e Engine<F>,
    r: Partition,
    columns: HashMap<(i64, i64, Partition), Arc<Vec<F>>>,
    /// `p_k(t^rho q^A)`.
    pk: HashMap<(Partition, usize), F>,
    /// `M_Y(t^rho q^A)` for every `Y` of one degree.
    mac_at: HashMap<(Partition, usize), Arc<Vec<F>>>,
    blocks: HashMap<usize, Arc<Vec<Vec<F>>>>,
}

impl<'e, F: Field> GammaTable<'e, F> {
    pub fn new(eng: &'e Engine<F>, r: Partition) -> Self {
        GammaTable {
            eng,
            r,
            columns: HashMap::new(),
            pk: HashMap::new(),
            mac_at: HashMap::new(),
            blocks: HashMap::new(),
        }
    }

    pub fn engine(&self) -> &'e Engine<F> {
        self.eng
    }

    pub fn rep(&self) -> &Partition {
        &self.r
    }

    fn pk(&mut self, a: &Partition, k: usize) -> F {
        if let Some(v) = self.pk.get(&(a.clone(), k)) {
            return v.clone();
        }
        let v = self.eng.spec_pk(k, a);
        self.pk.insert((a.clone(), k), v.clone());
        v
    }

    /// `M_Y(t^rho q^A)` for all `Y` with `|Y| = d`, in `tables(d)` order.
    pub fn mac_at(&mut self, a: &Partition, d: usize) -> Arc<Vec<F>> {
        if let Some(v) = self.mac_at.get(&(a.clone(), d)) {
            return v.clone();
        }
        let t = tables(d);
        let pks: Vec<F> = (0..=d).map(|k| if k == 0 { F::one() } else { self.pk(a, k) }).collect();
        let pv: Vec<F> = t.parts.iter().map(|nu| nu.parts().iter().fold(F::one(), |acc, &k| acc.mul(&pks[k]))).collect();
        let mac = self.eng.mac_degree(d);
        let out: Vec<F> = mac
            .p
            .iter()
            .map(|row| {
                let mut acc = F::zero();
                for (c, x) in row.iter().zip(&pv) {
                    if !c.is_zero() {
                        acc.add_assign(&c.mul(x));
                    }
                }
                acc
            })
            .collect();
        let out = Arc::new(out);
        self.mac_at.insert((a.clone(), d), out.clone());
        out
    }

    /// `S_(A,B) = G_A^-1 M_A(t^rho) M_B(t^rho q^A)`.
    pub fn s_entry(&mut self, a: &Partition, b: &Partition) -> F {
        let ta = tables(a.size());
        let ma = self.mac_at(&Partition::empty(), a.size())[ta.idx(a)].clone();
        let mb = self.mac_at(a, b.size())[tables(b.size()).idx(b)].clone();
        let g = self.eng.mac_degree(a.size()).norm_inv[ta.idx(a)].clone();
        g.mul(&ma).mul(&mb)
    }

    /// `[S_(A,Y)]` for `|A| = |Y| = d`, rows `A`.
    pub fn s_block(&mut self, d: usize) -> Arc<Vec<Vec<F>>> {
        if let Some(b) = self.blocks.get(&d) {
            return b.clone();
        }
        let t = tables(d);
        let mac = self.eng.mac_degree(d);
        let at_rho = self.mac_at(&Partition::empty(), d);
        let mut rows = Vec::with_capacity(t.len());
        for (i, a) in t.parts.iter().enumerate() {
            let f = mac.norm_inv[i].mul(&at_rho[i]);
            let row: Vec<F> = self.mac_at(a, d).iter().map(|x| f.mul(x)).collect();
            rows.push(row);
        }
        let b = Arc::new(rows);
        self.blocks.insert(d, b.clone());
        b
    }

    /// The column `Γ^(n,m)_(·,B)`, indexed by `tables(|B| + n|R|)`.
    pub fn column(&mut self, n: i64, m: i64, b: &Partition) -> Result<Arc<Vec<F>>> {
        check_knot(n, m)?;
        let key = (n, m, b.clone());
        if let Some(c) = self.columns.get(&key) {
            return Ok(c.clone());
        }
        let d = b.size() + n as usize * self.r.size();
        let t = tables(d);
        let col: Vec<F> = if self.r.is_empty() {
            t.parts.iter().map(|y| if y == b { F::one() } else { F::zero() }).collect()
        } else if n == 1 {
            let lr = self.eng.lr_column(&self.r, b);
            let e = SIGMA * m as i32;
            t.parts.iter().zip(lr).map(|(y, c)| if c.is_zero() { c } else { c.mul(&self.eng.t_ratio(y, b, e)) }).collect()
        } else {
            let m0 = m.rem_euclid(n);
            let k = (m - m0) / n;
            if k != 0 {
                let base = self.column(n, m0, b)?;
                let e = SIGMA * k as i32;
                t.parts.iter().zip(base.iter()).map(|(y, c)| if c.is_zero() { c.clone() } else { c.mul(&self.eng.t_ratio(y, b, e)) }).collect()
            } else {
                self.s_move(n, m, b)?
            }
        };
        let col = Arc::new(col);
        self.columns.insert(key, col.clone());
        Ok(col)
    }

    /// Right-hand side `sum_(Y') Γ^(m,-n)_(A,Y') S_(Y',B)` for every `A` of size `d`.
    fn s_move_rhs(&mut self, n: i64, m: i64, b: &Partition, d: usize) -> Result<Vec<F>> {
        let dm = m as usize * self.r.size();
        let t = tables(d);
        let mut rhs = vec![F::zero(); t.len()];
        if d < dm {
            return Ok(rhs);
        }
        for yp in tables(d - dm).parts.clone() {
            let s = self.s_entry(&yp, b);
            if s.is_zero() {
                continue;
            }
            let src = self.column(m, -n, &yp)?;
            for (x, g) in rhs.iter_mut().zip(src.iter()) {
                if !g.is_zero() {
                    x.add_assign(&g.mul(&s));
                }
            }
        }
        Ok(rhs)
    }

    fn s_move(&mut self, n: i64, m: i64, b: &Partition) -> Result<Vec<F>> {
        let d = b.size() + n as usize * self.r.size();
        let rhs = self.s_move_rhs(n, m, b, d)?;
        let mut a = self.s_block(d).as_ref().clone();
        let mut rhs: Vec<Vec<F>> = rhs.into_iter().map(|x| vec![x]).collect();
        let x = solve::solve(&mut a, &mut rhs).map_err(|e| match e {
            Error::Singular(s) => Error::Singular(format!("S block of degree {d} for ({n},{m}): {s}")),
            other => other,
        })?;
        Ok(x.into_iter().map(|mut r| r.remove(0)).collect())
    }

    /// Installs `c x` as the `S`-move column `Γ^(n,m)_(·,B)` (with `0 < m < n`) if `S x`
    /// is a single multiple `c` of the right-hand side, and returns `c`.
    ///
    /// The block is shown nonsingular by eliminating it at a random point modulo a
    /// large prime, so the installed column is the unique solution.
    pub fn certify_column(&mut self, n: i64, m: i64, b: &Partition, x: &[F], seed: u64) -> Result<Option<F>> {
        check_knot(n, m)?;
        if !(0 < m && m < n) {
            return Err(Error::Domain(format!("({n},{m}) is not an S-move column")));
        }
        let d = b.size() + n as usize * self.r.size();
        let rhs = self.s_move_rhs(n, m, b, d)?;
        let block = self.s_block(d);
        let mut c: Option<F> = None;
        for (row, r) in block.iter().zip(&rhs) {
            let mut y = F::zero();
            for (s, xv) in row.iter().zip(x) {
                if !s.is_zero() && !xv.is_zero() {
                    y.add_assign(&s.mul(xv));
                }
            }
            match (y.is_zero(), r.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return Ok(None),
                (false, false) => {
                    let ratio = r.div(&y).ok_or(Error::Pole)?;
                    match &c {
                        None => c = Some(ratio),
                        Some(c0) if *c0 == ratio => {}
                        Some(_) => return Ok(None),
                    }
                }
            }
        }
        let Some(c) = c else { return Ok(None) };
        nonsingular_mod_p(&self.r, d, seed)?;
        let col: Vec<F> = x.iter().map(|v| v.mul(&c)).collect();
        self.columns.insert((n, m, b.clone()), Arc::new(col));
        Ok(Some(c))
    }

    /// A single Γ-factor; zero off the grading.
    pub fn gamma(&mut self, n: i64, m: i64, a: &Partition, b: &Partition) -> Result<F> {
        check_knot(n, m)?;
        if a.size() != b.size() + n as usize * self.r.size() {
            return Ok(F::zero());
        }
        let col = self.column(n, m, b)?;
        Ok(col[tables(a.size()).idx(a)].clone())
    }

    /// Extra equation of the `S` move at a row `A` of any size: returns both sides.
    pub fn s_move_equation(&mut self, n: i64, m: i64, b: &Partition, a: &Partition) -> Result<(F, F)> {
        let d = b.size() + n as usize * self.r.size();
        let col = self.column(n, m, b)?;
        let mut lhs = F::zero();
        for (y, g) in tables(d).parts.iter().zip(col.iter()) {
            if !g.is_zero() {
                lhs.add_assign(&self.s_entry(a, y).mul(g));
            }
        }
        let dm = m as usize * self.r.size();
        let mut rhs = F::zero();
        if a.size() >= dm {
            for yp in tables(a.size() - dm).parts.clone() {
                let g = self.gamma(m, -n, a, &yp)?;
                if !g.is_zero() {
                    rhs.add_assign(&g.mul(&self.s_entry(&yp, b)));
                }
            }
        }
        Ok((lhs, rhs))
    }

    /// Every stored entry as `(n, m, A, B, value)`.
    pub fn entries(&self) -> Vec<(i64, i64, Partition, Partition, F)> {
        let mut out = Vec::new();
        for ((n, m, b), col) in &self.columns {
            let d = b.size() + *n as usize * self.r.size();
            for (a, v) in tables(d).parts.iter().zip(col.iter()) {
                if !v.is_zero() {
                    out.push((*n, *m, a.clone(), b.clone(), v.clone()));
                }
            }
        }
        out
    }
}

/// Errors unless the degree-`d` `S` block is invertible at a random point mod `PRIME_A`.
fn nonsingular_mod_p(r: &Partition, d: usize, seed: u64) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(seed);
    let h = |rng: &mut StdRng| Fp::<PRIME_A>::new(rng.gen_range(2..u64::MAX));
    let eng = Engine::new(Point { q_half: h(&mut rng), t_half: h(&mut rng) });
    let mut tab = GammaTable::new(&eng, r.clone());
    let mut a = tab.s_block(d).as_ref().clone();
    let mut z = vec![vec![Fp::zero()]; a.len()];
    solve::solve(&mut a, &mut z).map(|_| ())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    /// Divide by the coefficient of the single row `[n|R|]`.
    LeadingRow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// `[1^r]`.
    Antisymmetric,
    /// `[r]`.
    Symmetric,
}

impl RepKind {
    pub fn of(rep: &Partition) -> Option<(RepKind, usize)> {
        let r = rep.size();
        if r == 0 {
            None
        } else if rep.height() == 1 {
            Some((RepKind::Antisymmetric, r))
        } else if rep.len() == 1 {
            Some((RepKind::Symmetric, r))
        } else {
            None
        }
    }

    pub fn rep(self, r: usize) -> Partition {
        match self {
            RepKind::Antisymmetric => Partition::column(r),
            RepKind::Symmetric => Partition::row(r),
        }
    }
}

/// `|P^(n,m)_R> = sum_Y Γ^(n,m)_(Y,∅) M_Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeVector<F: Field = RatFunc> {
    pub rep: Partition,
    pub n: i64,
    pub m: i64,
    pub coeffs: SymFunc<F>,
    pub normalization: Normalization,
}

impl<F: Field> AmplitudeVector<F> {
    pub fn basis(&self) -> Basis {
        self.coeffs.basis()
    }

    pub fn degree(&self) -> usize {
        self.n as usize * self.rep.size()
    }

    /// Re-expands in `basis` and applies `norm`.
    pub fn render(&self, eng: &Engine<F>, basis: Basis, norm: Normalization) -> Result<AmplitudeVector<F>> {
        let mut c = eng.expand(&self.coeffs, basis)?;
        if norm == Normalization::LeadingRow {
            let lead = c.coeff(&Partition::row(self.degree()));
            let inv = lead
                .inv()
                .ok_or_else(|| Error::Domain("leading-row coefficient vanishes".into()))?;
            c = c.scale(&inv);
        }
        Ok(AmplitudeVector { coeffs: c, normalization: norm, ..self.clone() })
    }
}

/// Amplitude from the recursion, in the Macdonald basis.
pub fn amplitude_recursion_in<F: Field>(tab: &mut GammaTable<'_, F>, n: i64, m: i64) -> Result<AmplitudeVector<F>> {
    let col = tab.column(n, m, &Partition::empty())?;
    let d = n as usize * tab.rep().size();
    Ok(AmplitudeVector {
        rep: tab.rep().clone(),
        n,
        m,
        coeffs: SymFunc::from_dense(Basis::Macdonald, d, &col),
        normalization: Normalization::Raw,
    })
}

/// The shortcut amplitude for `(n, nk+1)` as a power-sum expansion, before framing.
fn hl_seed<F: Field>(eng: &Engine<F>, kind: RepKind, r: usize, n: usize) -> Result<Vec<F>> {
    let (basis, shape) = match kind {
        RepKind::Antisymmetric => (Basis::HallLittlewood, Partition::rectangle(n, r)),
        RepKind::Symmetric => (Basis::DualHallLittlewood, Partition::rectangle(r, n)),
    };
    eng.element(basis, &shape)
}

/// `T^k` applied to `HL_[n^r]` (antisymmetric) or the dual family on `[r^n]` (symmetric).
///
/// At `k = 0` the result is returned in power sums, which saves the Macdonald expansion.
pub fn amplitude_hl_in<F: Field>(eng: &Engine<F>, kind: RepKind, r: usize, n: usize, k: i64) -> Result<AmplitudeVector<F>> {
    if r == 0 || n == 0 {
        return Err(Error::Domain("amplitude_hl needs r, n >= 1".into()));
    }
    let d = n * r;
    let seed = hl_seed(eng, kind, r, n)?;
    let coeffs = if k == 0 {
        SymFunc::from_dense(Basis::PowerSum, d, &seed)
    } else {
        let mac = eng.expand_dense(d, &seed, Basis::Macdonald)?;
        let e = SIGMA * k as i32;
        let framed: Vec<F> = tables(d)
            .parts
            .iter()
            .zip(mac)
            .map(|(y, c)| c.mul(&eng.t_eigen(y).pow(e as i64).expect("monomial")))
            .collect();
        SymFunc::from_dense(Basis::Macdonald, d, &framed)
    };
    Ok(AmplitudeVector {
        rep: kind.rep(r),
        n: n as i64,
        m: n as i64 * k + 1,
        coeffs,
        normalization: Normalization::Raw,
    })
}

fn tables_cache() -> &'static Mutex<HashMap<Partition, Arc<Mutex<GammaTable<'static, RatFunc>>>>> {
    static T: OnceLock<Mutex<HashMap<Partition, Arc<Mutex<GammaTable<'static, RatFunc>>>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The process-wide exact table for colour `r`.
pub fn exact_table(r: &Partition) -> Arc<Mutex<GammaTable<'static, RatFunc>>> {
    tables_cache()
        .lock()
        .unwrap()
        .entry(r.clone())
        .or_insert_with(|| Arc::new(Mutex::new(GammaTable::new(exact(), r.clone()))))
        .clone()
}

pub fn t_eigen(y: &Partition) -> RatFunc {
    exact().t_eigen(y)
}

pub fn s_entry(a: &Partition, b: &Partition) -> RatFunc {
    exact_table(&Partition::empty()).lock().unwrap().s_entry(a, b)
}

/// `(T_A / T_B)^(SIGMA s) N^A_(R,B)`.
pub fn gamma_base(r: &Partition, s: i64, a: &Partition, b: &Partition) -> RatFunc {
    let n = crate::macdonald::lr_coeff(r, b, a);
    if n.is_zero() {
        return n;
    }
    n.mul(&exact().t_ratio(a, b, SIGMA * s as i32))
}

pub fn gamma(r: &Partition, n: i64, m: i64, a: &Partition, b: &Partition) -> Result<RatFunc> {
    exact_table(r).lock().unwrap().gamma(n, m, a, b)
}

/// The recursion amplitude over rational functions.
///
/// For `[1^r]` and `[r]` on `(n, nk+1)` the shortcut vector is first offered to
/// [`GammaTable::certify_column`] as the `(n, 1)` column, which replaces the elimination
/// when it passes; the framing steps and everything else run unchanged.
pub fn amplitude_recursion(r: &Partition, n: i64, m: i64) -> Result<AmplitudeVector> {
    check_knot(n, m)?;
    let t = exact_table(r);
    let mut t = t.lock().unwrap();
    if let Some((kind, size)) = RepKind::of(r) {
        let key = (n, 1, Partition::empty());
        if n > 1 && (m - 1).rem_euclid(n) == 0 && !t.columns.contains_key(&key) {
            let eng = exact();
            let d = n as usize * size;
            let x = eng.expand_dense(d, &hl_seed(eng, kind, size, n as usize)?, Basis::Macdonald)?;
            t.certify_column(n, 1, &Partition::empty(), &x, 0x5eed ^ d as u64)?;
        }
    }
    amplitude_recursion_in(&mut t, n, m)
}

pub fn amplitude_hl(kind: RepKind, r: usize, n: usize, k: i64) -> Result<AmplitudeVector> {
    amplitude_hl_in(exact(), kind, r, n, k)
}

/// If `a / b` is `±q^(x/2) t^(y/2)`, returns it.
pub fn monomial_ratio(a: &SymFunc, b: &SymFunc) -> Option<RatFunc> {
    if a.basis() != b.basis() || a.terms().len() != b.terms().len() {
        return None;
    }
    let mut ratio: Option<RatFunc> = None;
    for (l, x) in a.terms() {
        let y = b.terms().get(l)?;
        let r = x.div(y)?;
        match &ratio {
            None => {
                r.as_monomial()?;
                ratio = Some(r);
            }
            Some(r0) if *r0 == r => {}
            Some(_) => return None,
        }
    }
    ratio
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::expr::parse;
    use crate::part;

    fn r(s: &str) -> RatFunc {
        parse(s).unwrap()
    }

    #[test]
    fn plans() {
        assert!(plan_moves(1, 0).unwrap().moves.is_empty());
        let p = plan_moves(2, 3).unwrap();
        assert_eq!(p.descent(), vec![(2, 3), (2, 1), (1, -2), (1, 0)]);
        assert_eq!(p.replay(), (2, 3));
        assert_eq!(plan_moves(5, 1).unwrap().descent(), vec![(5, 1), (1, -5), (1, 0)]);
        assert_eq!(plan_moves(7, -12).unwrap().replay(), (7, -12));
        assert!(matches!(plan_moves(2, 4), Err(Error::NotAKnot { .. })));
        assert!(matches!(plan_moves(-1, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn eigenvalues_and_base() {
        assert_eq!(t_eigen(&part![]), RatFunc::one());
        assert_eq!(t_eigen(&part![1]), r("t^(1/2)*q^(-1/2)"));
        assert_eq!(t_eigen(&part![2]), r("t/q^2"));
        assert_eq!(gamma_base(&part![1], 0, &part![1, 1], &part![1]), r("(1-q)*(1+t)/(1-q*t)"));
        assert_eq!(gamma_base(&part![1], -2, &part![2], &part![1]), r("q^3/t"));
        assert!(gamma_base(&part![1], 3, &part![3], &part![1]).is_zero());
    }

    #[test]
    fn s_entries() {
        assert_eq!(s_entry(&part![], &part![]), RatFunc::one());
        let m2 = crate::macdonald::macdonald_p(&part![2]);
        assert_eq!(s_entry(&part![], &part![2]), crate::macdonald::principal_spec(&m2, &part![]));
        assert_eq!(s_entry(&part![1], &part![]), r("(1-t)/(1-q) * (-1/(1-t))"));
    }

    #[test]
    fn trefoil() {
        let box1 = part![1];
        assert_eq!(gamma(&box1, 2, 1, &part![2], &part![]).unwrap(), r("t"));
        assert_eq!(gamma(&box1, 2, 1, &part![1, 1], &part![]).unwrap(), r("t*q*(t^2-1)/(1-t*q)"));
        assert_eq!(gamma(&box1, 2, 3, &part![2], &part![]).unwrap(), r("t^2/q^2"));
        assert_eq!(gamma(&box1, 2, 3, &part![1, 1], &part![]).unwrap(), r("t^3*(t^2-1)/(1-t*q)"));
        assert!(gamma(&box1, 2, 3, &part![1], &part![]).unwrap().is_zero());
        let a = amplitude_recursion(&box1, 1, 5).unwrap();
        assert_eq!(a.coeffs.terms().len(), 1);
        assert_eq!(a.coeffs.coeff(&part![1]), t_eigen(&part![1]).pow(5).unwrap());
    }

    #[test]
    fn empty_colour_is_identity() {
        let e = part![];
        assert_eq!(gamma(&e, 3, 2, &part![2, 1], &part![2, 1]).unwrap(), RatFunc::one());
        assert!(gamma(&e, 3, 2, &part![3], &part![2, 1]).unwrap().is_zero());
    }

    #[test]
    fn hl_shortcut_matches_recursion_for_trefoil() {
        let hl = amplitude_hl(RepKind::Antisymmetric, 1, 2, 1).unwrap();
        let rec = amplitude_recursion(&part![1], 2, 3).unwrap();
        assert!(monomial_ratio(&hl.coeffs, &rec.coeffs).is_some());
        let s = hl.render(exact(), Basis::ModifiedSchur, Normalization::LeadingRow).unwrap();
        assert_eq!(s.coeffs.terms().len(), 2);
        let s0 = amplitude_hl(RepKind::Antisymmetric, 1, 2, 0)
            .unwrap()
            .render(exact(), Basis::ModifiedSchur, Normalization::LeadingRow)
            .unwrap();
        assert_eq!(s0.coeffs, SymFunc::term(Basis::ModifiedSchur, part![2], RatFunc::one()));
    }
}
