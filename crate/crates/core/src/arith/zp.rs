//! Word-size prime field arithmetic and dense univariate polynomials over it.

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62 in decreasing order.
pub fn large_primes() -> impl Iterator<Item = u64> {
    let mut c = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(c) {
            c -= 2;
        }
        let p = c;
        c -= 2;
        Some(p)
    })
}

/// Dense polynomial over Z/p, lowest degree first, no trailing zeros.
pub type UPoly = Vec<u64>;

pub fn trim(a: &mut UPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &UPoly) -> isize {
    a.len() as isize - 1
}

pub fn eval(a: &UPoly, x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for &c in a.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

pub fn scale(a: &UPoly, c: u64, p: u64) -> UPoly {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| mulmod(x, c, p)).collect()
}

pub fn add(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let n = a.len().max(b.len());
    let mut r: UPoly = (0..n)
        .map(|i| addmod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut r);
    r
}

pub fn sub(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let n = a.len().max(b.len());
    let mut r: UPoly = (0..n)
        .map(|i| submod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut r);
    r
}

pub fn mul(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let s = acc[i + j] + x as u128 * y as u128;
            acc[i + j] = if s >= pp * pp { s % pp } else { s };
        }
    }
    let mut r: UPoly = acc.into_iter().map(|v| (v % pp) as u64).collect();
    trim(&mut r);
    r
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &UPoly, b: &UPoly, p: u64) -> (UPoly, UPoly) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let inv = invmod(b[db], p).expect("nonzero leading coefficient");
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulmod(r[k + db], inv, p);
        q[k] = c;
        if c != 0 {
            for j in 0..=db {
                r[k + j] = submod(r[k + j], mulmod(c, b[j], p), p);
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn make_monic(a: &UPoly, p: u64) -> UPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, invmod(lc, p).unwrap(), p),
    }
}

/// Monic gcd.
pub fn gcd(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(&a, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_inverse() {
        let p = large_primes().next().unwrap();
        assert!(p < 1 << 62 && is_prime(p));
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3215031751));
        let x = 123456789;
        assert_eq!(mulmod(x, invmod(x, p).unwrap(), p), 1);
    }

    #[test]
    fn univariate_gcd() {
        let p = 1_000_000_007;
        // (x+1)(x+2) and (x+1)(x+3)
        let a = mul(&vec![1, 1], &vec![2, 1], p);
        let b = mul(&vec![1, 1], &vec![3, 1], p);
        assert_eq!(gcd(&a, &b, p), vec![1, 1]);
        let (q, r) = divrem(&a, &vec![1, 1], p);
        assert_eq!(q, vec![2, 1]);
        assert!(r.is_empty());
    }
}
