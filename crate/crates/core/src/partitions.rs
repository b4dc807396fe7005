//! Young diagrams.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
///
/// The ordering sorts by size first and then reverse-lexicographically, so within
/// one degree `[3] < [2,1] < [1,1,1]`; this is the order [`enumerate`] returns and
/// it refines dominance downwards.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// Outcome of a dominance comparison of `mu` against `lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    LessEqual,
    Greater,
    Incomparable,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row `[n]`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The single column `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `[w^h]`: `h` rows of length `w`.
    pub fn rectangle(w: usize, h: usize) -> Self {
        if w == 0 {
            return Self::empty();
        }
        Partition(vec![w; h])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let h = self.height();
        let mut out = Vec::with_capacity(h);
        for j in 0..h {
            out.push(self.0.iter().take_while(|&&p| p > j).count());
        }
        Partition(out)
    }

    /// Arm and leg of the 1-based cell `(row, col)`.
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(usize, usize)> {
        if row == 0 || col == 0 || row > self.len() || col > self.0[row - 1] {
            return Err(Error::Domain(format!("cell ({row},{col}) outside {self}")));
        }
        let arm = self.0[row - 1] - col;
        let leg = self.0.iter().skip(row).take_while(|&&p| p >= col).count();
        Ok((arm, leg))
    }

    /// All cells as 1-based `(row, col, arm, leg)`.
    pub fn cells(&self) -> Vec<(usize, usize, usize, usize)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                out.push((i + 1, j + 1, p - j - 1, conj.0[j] - i - 1));
            }
        }
        out
    }

    /// `sum of squared parts`.
    pub fn sq_norm(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    /// `sum (i-1) lambda_i`.
    pub fn n_weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Compares `self` (as mu) against `lambda` in dominance order.
    pub fn dominance_leq(&self, lambda: &Partition) -> Result<Dominance> {
        if self.size() != lambda.size() {
            return Err(Error::Domain("dominance needs equal sizes".into()));
        }
        let n = self.len().max(lambda.len());
        let (mut a, mut b) = (0, 0);
        let (mut le, mut ge) = (true, true);
        for i in 0..n {
            a += self.part(i);
            b += lambda.part(i);
            le &= a <= b;
            ge &= a >= b;
        }
        Ok(if le {
            Dominance::LessEqual
        } else if ge {
            Dominance::Greater
        } else {
            Dominance::Incomparable
        })
    }

    /// Multiplicity of each part size `1..=height`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.height() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_lambda = prod_j j^{m_j} m_j!`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (j, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= (j * k) as u128;
            }
        }
        z
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Union of parts, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::from_unsorted(v)
    }

    /// Partitions obtained by adding a horizontal strip of `k` cells.
    pub fn add_horizontal_strip(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        cur.push(0);
        fn rec(i: usize, left: usize, base: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::from_unsorted(cur.clone()));
                }
                return;
            }
            let cap = if i == 0 { left } else { (base[i - 1] - base[i]).min(left) };
            for add in (0..=cap).rev() {
                cur[i] = base[i] + add;
                rec(i + 1, left - add, base, cur, out);
            }
            cur[i] = base[i];
        }
        let base = cur.clone();
        rec(0, k, &base, &mut cur, &mut out);
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `d`, reverse-lexicographic (`[d]` first).
pub fn enumerate(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(d, d, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad partition part '{p}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partitions::Partition::new(vec![$($x),+]).unwrap() };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![2].conjugate(), part![1, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![4, 2, 1].conjugate(), part![3, 2, 1, 1]);
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(part![2, 1].arm_leg(1, 1).unwrap(), (1, 1));
        assert_eq!(part![2].arm_leg(1, 2).unwrap(), (0, 0));
        assert_eq!(part![3, 3, 1].arm_leg(1, 2).unwrap(), (1, 1));
        assert!(part![2].arm_leg(2, 1).is_err());
        assert!(part![2].arm_leg(1, 3).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(part![2, 1].dominance_leq(&part![3]).unwrap(), Dominance::LessEqual);
        assert_eq!(
            part![3, 1, 1, 1].dominance_leq(&part![2, 2, 2]).unwrap(),
            Dominance::Incomparable
        );
        let l = part![3, 2];
        assert_eq!(l.dominance_leq(&l).unwrap(), Dominance::LessEqual);
        assert_eq!(part![3].dominance_leq(&part![2, 1]).unwrap(), Dominance::Greater);
        assert!(part![2].dominance_leq(&part![2, 1]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(0), vec![part![]]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(enumerate(4)[0], part![4]);
        assert_eq!(enumerate(4)[4], part![1, 1, 1, 1]);
        // independent counter: p(n, k) partitions of n into parts <= k
        fn count(n: usize, k: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=k.min(n)).map(|p| count(n - p, p)).sum()
        }
        assert_eq!(count(10, 10), 42);
        assert_eq!(enumerate(10).len(), count(10, 10));
    }

    #[test]
    fn sq_norm_examples() {
        assert_eq!(part![2, 1].sq_norm(), 5);
        assert_eq!(part![].sq_norm(), 0);
        assert_eq!(part![3, 3].sq_norm(), 18);
    }

    #[test]
    fn text_form() {
        assert_eq!(part![3, 1, 1].to_string(), "3,1,1");
        assert_eq!(part![].to_string(), "0");
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), part![3, 1, 1]);
        assert_eq!("0".parse::<Partition>().unwrap(), part![]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn strips_and_z() {
        let s = part![2, 1].add_horizontal_strip(2);
        assert_eq!(s.len(), 4); // [4,1] [3,2] [3,1,1] [2,2,1]
        assert!(s.contains(&part![2, 2, 1]));
        assert_eq!(part![1, 1].z(), 2);
        assert_eq!(part![2, 2, 1].z(), 8);
    }
}
