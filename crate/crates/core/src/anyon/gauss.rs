//! Exact Gauss sums of abelian anyon spins in a cyclotomic field.
//!
//! Elements of `Q(ζ_M)` are held as rational combinations of `ζ_M^j`,
//! `0 ≤ j < M`, i.e. in `Q[x]/(x^M - 1)`; equality is decided after reducing
//! modulo the cyclotomic polynomial `Φ_M`.

use num::integer::Integer;
use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `θ = e^{2πi num/den}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Spin {
    pub num: i64,
    pub den: u64,
}

impl Spin {
    pub fn new(num: i64, den: u64) -> Self {
        Spin { num, den }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Cyclotomic {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    fn zero(m: usize) -> Self {
        Cyclotomic { m, coeffs: vec![BigRational::zero(); m] }
    }

    fn root(m: usize, k: i64) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[k.rem_euclid(m as i64) as usize] = BigRational::one();
        z
    }

    fn add(&self, other: &Self) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[(i + j) % self.m] += a * b;
            }
        }
        out
    }

    fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Complex conjugate: `ζ^j ↦ ζ^{-j}`.
    fn conj(&self) -> Self {
        let mut out = Self::zero(self.m);
        for (j, a) in self.coeffs.iter().enumerate() {
            out.coeffs[(self.m - j) % self.m] = a.clone();
        }
        out
    }

    fn is_zero_mod(&self, phi: &[BigInt]) -> bool {
        let mut r = self.coeffs.clone();
        let deg = phi.len() - 1;
        for top in (deg..r.len()).rev() {
            let c = std::mem::take(&mut r[top]);
            if c.is_zero() {
                continue;
            }
            // phi is monic
            for (k, pk) in phi.iter().enumerate().take(deg) {
                r[top - deg + k] -= &c * BigRational::from_integer(pk.clone());
            }
        }
        r.iter().all(Zero::is_zero)
    }
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone() / den[dd].clone();
        for (k, dk) in den.iter().enumerate() {
            r[i + k] -= &c * dk;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); m + 1];
    p[0] = -BigInt::one();
    p[m] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = poly_div_exact(&p, &cyclotomic_polynomial(d));
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussPhase {
    /// The sum equals `√N e^{2πi c/8}`.
    pub eighth_root: u32,
    pub num_anyons: usize,
    pub field_order: usize,
}

/// `(Σ_j θ_j) / √N` for an abelian theory with all `d_j = 1`, exactly.
///
/// `√N` is taken from the quadratic Gauss sum `Σ_{k<4N} ζ_{4N}^{k²} =
/// (1+i)·2√N`, so no floating point enters.
pub fn gauss_sum_phase(spins: &[Spin]) -> Result<GaussPhase> {
    let n = spins.len();
    if n == 0 {
        return Err(Error::Usage("need at least one anyon".into()));
    }
    if spins.iter().any(|s| s.den == 0) {
        return Err(Error::Usage("spin denominators must be positive".into()));
    }
    let mut m = 8usize.lcm(&(4 * n));
    for s in spins {
        m = m.lcm(&(s.den as usize));
    }
    let mut sum = Cyclotomic::zero(m);
    for s in spins {
        let k = (s.num as i128 * (m as i128 / s.den as i128)).rem_euclid(m as i128) as i64;
        sum = sum.add(&Cyclotomic::root(m, k));
    }
    let step = (m / (4 * n)) as i64;
    let mut g = Cyclotomic::zero(m);
    for k in 0..4 * n as i64 {
        g = g.add(&Cyclotomic::root(m, (k * k % (4 * n as i64)) * step));
    }
    let one_minus_i = Cyclotomic::root(m, 0).sub(&Cyclotomic::root(m, (m / 4) as i64));
    let sqrt_n = g.mul(&one_minus_i).scale(&BigRational::new(BigInt::one(), BigInt::from(4)));
    let phi = cyclotomic_polynomial(m);
    for c in 0..8 {
        let candidate = sqrt_n.mul(&Cyclotomic::root(m, (c * m / 8) as i64));
        if sum.sub(&candidate).is_zero_mod(&phi) {
            return Ok(GaussPhase { eighth_root: c as u32, num_anyons: n, field_order: m });
        }
    }
    let norm = sum.mul(&sum.conj());
    let n_elem = Cyclotomic::root(m, 0).scale(&BigRational::from_integer(BigInt::from(n)));
    if norm.sub(&n_elem).is_zero_mod(&phi) {
        Err(Error::NotModular("the normalized sum has unit modulus but is not an eighth root of unity".into()))
    } else {
        Err(Error::NotModular(format!("|Σ θ_j|² differs from the number of anyons {n}")))
    }
}
