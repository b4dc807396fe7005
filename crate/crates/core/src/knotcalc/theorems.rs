//! Checks of the Hall-Littlewood identities and of the overdetermined `S`-move system.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{amplitude_hl, amplitude_recursion, exact_table, AmplitudeVector, GammaTable, Normalization, RepKind, SIGMA};
use crate::arith::{Field, Point, RatFunc};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{exact, tables, Basis, Engine, SymFunc};

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds,
    Fails {
        witness: String,
        /// `lhs / rhs` when the identity holds up to a monomial.
        monomial_ratio: Option<RatFunc>,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Copy)]
enum Which {
    /// `[1^r]` against `HL_[n^r]`.
    Antisymmetric,
    /// `[r]` against the dual family on `[r^n]`.
    Symmetric,
}

impl<F: Field> GammaTable<'_, F> {
    /// Evaluates a dense power-sum vector of degree `d` at `t^rho q^A`.
    pub fn eval_at(&mut self, v: &[F], d: usize, a: &Partition) -> F {
        let t = tables(d);
        let mut acc = F::zero();
        for (nu, c) in t.parts.iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let mut x = c.clone();
            for &k in nu.parts() {
                x = x.mul(&self.pk(a, k));
            }
            acc.add_assign(&x);
        }
        acc
    }
}

fn sides<F: Field>(tab: &mut GammaTable<'_, F>, which: Which, n: usize, r: usize, a: &Partition) -> Result<(F, F)> {
    let eng = tab.engine();
    let da = a.size();
    let ta = tables(da);
    let ia = ta.idx(a);
    let ma = tab.mac_at(&Partition::empty(), da)[ia].clone();
    let ma_inv = ma.inv().ok_or_else(|| Error::Internal(format!("M_{a:?}(t^rho) vanishes")))?;
    let ga = eng.mac_degree(da).norm[ia].clone();
    let rep = tab.rep().clone();
    let dy = da - r;
    let ty = tables(dy);
    let my = tab.mac_at(&Partition::empty(), dy);
    let gy = eng.mac_degree(dy);
    let mut lhs = F::zero();
    for (j, y) in ty.parts.iter().enumerate() {
        let nn = eng.lr_column(&rep, y)[ia].clone();
        if nn.is_zero() {
            continue;
        }
        let term = nn
            .mul(&eng.t_ratio(a, y, -(n as i32) * SIGMA))
            .mul(&my[j])
            .mul(&ma_inv)
            .mul(&ga)
            .mul(&gy.norm_inv[j]);
        lhs.add_assign(&term);
    }
    let (ni, ri) = (n as i32, r as i32);
    let (basis, shape, konst) = match which {
        Which::Antisymmetric => (Basis::HallLittlewood, Partition::rectangle(n, r), eng.mono(-ri * (ni - 2), ri * (ri - 2))),
        Which::Symmetric => {
            let mut c = eng.mono(-ri * (ni - 2), ni * ri);
            if (n * r) % 2 == 1 {
                c = c.neg();
            }
            for i in 0..ri {
                c = c.mul(&eng.one_minus(i, 1).inv().ok_or(Error::Pole)?);
            }
            (Basis::DualHallLittlewood, Partition::rectangle(r, n), c)
        }
    };
    let v = eng.element(basis, &shape)?;
    let rhs = konst.mul(&tab.eval_at(&v, shape.size(), a));
    Ok((lhs, rhs))
}

/// Rational points (as square roots of `q`, `t`) for the pre-screen.
fn screen_engines() -> &'static [Engine<BigRational>; 3] {
    static E: OnceLock<[Engine<BigRational>; 3]> = OnceLock::new();
    E.get_or_init(|| {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        [
            Engine::new(Point { q_half: r(3, 5), t_half: r(2, 7) }),
            Engine::new(Point { q_half: r(5, 11), t_half: r(7, 3) }),
            Engine::new(Point { q_half: r(2, 9), t_half: r(13, 4) }),
        ]
    })
}

fn verify(which: Which, n: usize, r: usize, a: &Partition) -> Result<Verdict> {
    if n == 0 || r == 0 {
        return Err(Error::Domain("n and r must be positive".into()));
    }
    if a.size() < r {
        return Err(Error::Domain(format!("|A| = {} < r = {r}: empty left-hand side", a.size())));
    }
    let rep = match which {
        Which::Antisymmetric => Partition::column(r),
        Which::Symmetric => Partition::row(r),
    };
    let mut screen_fail = None;
    for (i, eng) in screen_engines().iter().enumerate() {
        let mut tab = GammaTable::new(eng, rep.clone());
        let (l, rr) = sides(&mut tab, which, n, r, a)?;
        if l != rr {
            screen_fail = Some(format!("pre-screen point {i}: lhs {l} != rhs {rr}"));
            break;
        }
    }
    let t = exact_table(&rep);
    let mut tab = t.lock().unwrap();
    let (l, rr) = sides(&mut tab, which, n, r, a)?;
    if l == rr {
        return Ok(Verdict::Holds);
    }
    let ratio = l.div(&rr).filter(|x| x.as_monomial().is_some());
    let witness = screen_fail.unwrap_or_else(|| format!("A = {a:?}: lhs {l} != rhs {rr}"));
    Ok(Verdict::Fails { witness, monomial_ratio: ratio })
}

/// `sum_Y N^A_([1^r],Y) (T_A/T_Y)^-n M_Y(t^rho)/M_A(t^rho) G_A/G_Y
///  = t^(r(r-2)/2) q^(-r(n-2)/2) HL_[n^r](t^rho q^A)`.
pub fn verify_theorem_41(n: usize, r: usize, a: &Partition) -> Result<Verdict> {
    verify(Which::Antisymmetric, n, r, a)
}

/// The symmetric counterpart, with
/// `(-1)^(nr) t^(nr/2) q^(-r(n-2)/2) prod_(i<r) (1 - t q^i)^-1` and the dual family on `[r^n]`.
pub fn verify_theorem_42(n: usize, r: usize, a: &Partition) -> Result<Verdict> {
    verify(Which::Symmetric, n, r, a)
}

/// Checks the `S`-move equations at every row `A` of size `d + extra` (with `d` the
/// size used in the solve) against the solved column `Γ^(n,m)_(·,B)`.
pub fn check_overdetermined(rep: &Partition, n: i64, m: i64, b: &Partition, extra: usize) -> Result<Verdict> {
    super::check_knot(n, m)?;
    if n == 1 {
        return Ok(Verdict::Holds);
    }
    let m0 = m.rem_euclid(n);
    let d = b.size() + n as usize * rep.size() + extra;
    let t = exact_table(rep);
    let mut tab = t.lock().unwrap();
    for a in tables(d).parts.iter() {
        let (l, r) = tab.s_move_equation(n, m0, b, a)?;
        if l != r {
            return Ok(Verdict::Fails { witness: format!("row {a:?}: {l} != {r}"), monomial_ratio: None });
        }
    }
    Ok(Verdict::Holds)
}

/// Outcome of comparing the two amplitude routes for one knot and colour.
#[derive(Clone, Debug, PartialEq)]
pub struct RouteComparison {
    pub recursion: AmplitudeVector,
    /// `amplitude_hl`, in the Macdonald basis.
    pub shortcut: AmplitudeVector,
    /// `recursion / shortcut`, when that ratio is the same for every `Y`.
    pub ratio: Option<RatFunc>,
}

impl RouteComparison {
    /// Whether the two routes differ by one global `±q^(a/2) t^(b/2)`.
    pub fn monomial(&self) -> bool {
        self.ratio.as_ref().is_some_and(|r| r.as_monomial().is_some())
    }
}

/// Compares `amplitude_recursion(R, n, m)` with `amplitude_hl` for `m = nk + 1`.
pub fn compare_routes(rep: &Partition, n: i64, m: i64) -> Result<RouteComparison> {
    super::check_knot(n, m)?;
    let (kind, r) = RepKind::of(rep).ok_or_else(|| Error::Domain(format!("{rep:?} is neither [1^r] nor [r]")))?;
    if (m - 1).rem_euclid(n) != 0 {
        return Err(Error::Domain(format!("({n},{m}) is not of the form (n, nk+1)")));
    }
    let eng = exact();
    let shortcut = amplitude_hl(kind, r, n as usize, (m - 1) / n)?.render(eng, Basis::Macdonald, Normalization::Raw)?;
    let recursion = amplitude_recursion(rep, n, m)?;
    let ratio = constant_ratio(&recursion.coeffs, &shortcut.coeffs);
    Ok(RouteComparison { recursion, shortcut, ratio })
}

fn constant_ratio(a: &SymFunc, b: &SymFunc) -> Option<RatFunc> {
    if a.basis() != b.basis() || a.terms().len() != b.terms().len() {
        return None;
    }
    let mut ratio: Option<RatFunc> = None;
    for (l, x) in a.terms() {
        let r = x.div(b.terms().get(l)?)?;
        match &ratio {
            None => ratio = Some(r),
            Some(r0) if *r0 == r => {}
            Some(_) => return None,
        }
    }
    ratio
}
