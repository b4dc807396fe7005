//! Dense linear solves over a [`Field`].

use crate::arith::Field;
use crate::error::{Error, Result};

/// Solves `a x = b` for square `a` and a block of right-hand sides, consuming both.
///
/// Gauss-Jordan with division; among the usable pivots in a column the one with the
/// smallest [`Field::complexity`] wins, which keeps rational-function entries small.
pub fn solve<F: Field>(a: &mut [Vec<F>], b: &mut [Vec<F>]) -> Result<Vec<Vec<F>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Internal("solve: shape mismatch".into()));
    }
    for c in 0..n {
        let piv = (c..n)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| a[r][c].complexity())
            .ok_or_else(|| Error::Singular(format!("no pivot in column {c} of {n}")))?;
        a.swap(c, piv);
        b.swap(c, piv);
        let inv = a[c][c].inv().expect("nonzero pivot");
        for j in c..n {
            a[c][j] = a[c][j].mul(&inv);
        }
        for x in b[c].iter_mut() {
            *x = x.mul(&inv);
        }
        let (prow, prhs) = (a[c].clone(), b[c].clone());
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in c..n {
                if !prow[j].is_zero() {
                    a[r][j] = a[r][j].sub(&f.mul(&prow[j]));
                }
            }
            for (x, p) in b[r].iter_mut().zip(&prhs) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
    }
    Ok(b.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fp, PRIME_A, RatFunc};
    use crate::cli::expr::parse;

    #[test]
    fn small_rational_system() {
        // [[1, q], [t, 1]] x = [1, 0]
        let r = |s: &str| parse(s).unwrap();
        let mut a = vec![vec![r("1"), r("q")], vec![r("t"), r("1")]];
        let mut b = vec![vec![r("1")], vec![r("0")]];
        let x = solve(&mut a, &mut b).unwrap();
        assert_eq!(x[0][0], r("1/(1-q*t)"));
        assert_eq!(x[1][0], r("-t/(1-q*t)"));
        let _: RatFunc = x[0][0].clone();
    }

    #[test]
    fn singular_is_reported() {
        type F = Fp<PRIME_A>;
        let mut a = vec![vec![F::from_i64(1), F::from_i64(2)], vec![F::from_i64(2), F::from_i64(4)]];
        let mut b = vec![vec![F::one()], vec![F::one()]];
        assert!(matches!(solve(&mut a, &mut b), Err(Error::Singular(_))));
    }
}
