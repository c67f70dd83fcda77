//! Prime-field helpers. Residues are stored in `[0, p)` and reduced eagerly.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

#[inline]
pub fn reduce(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue (Fermat).
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow(a, p as u64 - 2, p)
}

/// `1/2` in F_p for odd p.
pub fn half(p: u32) -> Option<u32> {
    if p == 2 {
        None
    } else {
        Some(p.div_ceil(2))
    }
}

/// Signed representative in `(-p/2, p/2]`, used for printing.
pub fn signed(a: u32, p: u32) -> i64 {
    if a as u64 * 2 > p as u64 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(7));
        assert!(!is_prime(4) && !is_prime(1) && !is_prime(0) && !is_prime(9));
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
        assert_eq!(half(3), Some(2));
        assert_eq!(half(2), None);
    }
}
