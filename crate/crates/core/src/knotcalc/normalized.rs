//! Amplitudes in `S~` with leading-row normalization, the form the published tables use.

use super::reconstruct::{reconstruct, RecursionTable};
use super::{amplitude_hl, amplitude_recursion, AmplitudeVector, Normalization, RepKind};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::partitions::Partition;
use crate::symfunc::{exact, tables, Basis, SymFunc};

/// How a normalized table was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `amplitude_hl`, exact.
    Shortcut,
    /// The `S`/`T` recursion over rational functions.
    Recursion,
    /// The recursion evaluated modulo primes and lifted to integer polynomials.
    Reconstructed,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Shortcut => "hl",
            Route::Recursion => "recursion",
            Route::Reconstructed => "recursion-modular",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormalizedTable {
    pub rep: Partition,
    pub n: i64,
    pub m: i64,
    /// `S~` coefficients divided by the `S~_[n|R|]` coefficient.
    pub coeffs: SymFunc,
    pub route: Route,
}

/// `|P^(n,m)_R>` in `S~` with leading-row normalization.
///
/// `[1^r]` and `[r]` on `(n, nk+1)` use the shortcut. Other colours at `m = 1` are
/// reconstructed from modular evaluations of the recursion; everything else runs the
/// exact recursion.
pub fn normalized_table(rep: &Partition, n: i64, m: i64) -> Result<NormalizedTable> {
    super::check_knot(n, m)?;
    let shortcut = RepKind::of(rep).filter(|_| (m - 1).rem_euclid(n) == 0);
    let (coeffs, route) = if let Some((kind, r)) = shortcut {
        let a = amplitude_hl(kind, r, n as usize, (m - 1) / n)?;
        (leading_row(&a)?, Route::Shortcut)
    } else if m == 1 && n > 1 {
        let polys = reconstruct(&RecursionTable { rep: rep.clone(), n, m }, 0x7ab1e)?;
        let parts = &tables(n as usize * rep.size()).parts;
        let c = SymFunc::from_terms(Basis::ModifiedSchur, parts.iter().cloned().zip(polys.iter().map(|p| p.to_ratfunc())));
        (c, Route::Reconstructed)
    } else {
        (leading_row(&amplitude_recursion(rep, n, m)?)?, Route::Recursion)
    };
    Ok(NormalizedTable { rep: rep.clone(), n, m, coeffs, route })
}

fn leading_row(a: &AmplitudeVector) -> Result<SymFunc> {
    Ok(a.render(exact(), Basis::ModifiedSchur, Normalization::LeadingRow)?.coeffs)
}

/// Whether `f` is a polynomial in `q` and `tau = 1/t` with nonnegative integer coefficients.
pub fn in_n_q_tau(f: &RatFunc) -> bool {
    f.is_laurent_poly()
        && f.numer()
            .terms()
            .iter()
            .all(|((a, b), c)| *a >= 0 && a % 2 == 0 && *b <= 0 && b % 2 == 0 && !c.is_negative())
}
