//! The bounded-support restriction of
//! `dist(α, β) = sup_x ‖α(x) - β(x)‖ / (‖x‖ |Supp x|)` over unitary Paulis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::weyl::{PhasedAutomorphism, PhasedPauli};

/// `|1 - e^{2πi k/M}|` kept exactly as `(k, M)`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Chord {
    pub k: u32,
    pub modulus: u32,
}

impl Chord {
    pub fn value(&self) -> f64 {
        2.0 * (std::f64::consts::PI * self.k as f64 / self.modulus as f64).sin().abs()
    }
}

/// `‖P - Q‖ = max |1 - μ|` over the spectrum of `P^† Q`. A nonscalar
/// `R = P^†Q` with `R^p = ζ_m^t` has spectrum `{ζ_{mp}^{t + m j}}`; a scalar
/// one is its own eigenvalue.
pub fn pauli_distance(a: &PhasedPauli, b: &PhasedPauli) -> Result<Chord> {
    let r = a.dagger().mul(b)?;
    let (p, m) = (r.p, r.modulus());
    let big = m * p;
    if r.is_scalar() {
        return Ok(Chord { k: r.c * p % big, modulus: big });
    }
    let t = r.pow(p as u64);
    debug_assert!(t.is_scalar());
    let best = (0..p).map(|j| (t.c + m * j) % big).max_by_key(|&k| (k.min(big - k), std::cmp::Reverse(k))).unwrap();
    Ok(Chord { k: best, modulus: big })
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DistReport {
    pub value: f64,
    pub chord: Chord,
    pub support_size: usize,
    /// Qudit indices and `(a, b)` exponents of a maximizing operator.
    pub witness: Vec<(usize, u32, u32)>,
    pub max_support: usize,
    pub operators_checked: u64,
}

fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Maximum over Paulis supported on at most `max_support` sites of
/// `‖α(x) - β(x)‖ / |Supp x|`. A site groups `q` consecutive qudits. This is
/// a lower bound for the full `dist`.
pub fn dist_bounded(
    alpha: &PhasedAutomorphism,
    beta: &PhasedAutomorphism,
    q: usize,
    max_support: usize,
) -> Result<DistReport> {
    if max_support < 1 {
        return Err(Error::Usage("max support must be at least 1".into()));
    }
    let (p, n) = (alpha.prime(), alpha.num_qudits());
    if beta.prime() != p || beta.num_qudits() != n {
        return Err(Error::IncompatibleRing("automorphisms on different systems".into()));
    }
    if q == 0 || n % q != 0 {
        return Err(Error::Shape(format!("{n} qudits do not split into sites of {q}")));
    }
    let sites = n / q;
    let local = (p as u64).pow(2 * q as u32);
    let mut best = DistReport {
        value: 0.0,
        chord: Chord { k: 0, modulus: 1 },
        support_size: 0,
        witness: Vec::new(),
        max_support,
        operators_checked: 0,
    };
    let mut failure = None;
    for size in 1..=max_support.min(sites) {
        combinations(sites, size, &mut |chosen| {
            if failure.is_some() {
                return;
            }
            // every site gets a nonidentity local Pauli: digits 1..p^{2q}
            let mut digits = vec![1u64; size];
            loop {
                let mut x = PhasedPauli::identity(p, n);
                for (&site, &d) in chosen.iter().zip(&digits) {
                    let mut d = d;
                    for j in 0..q {
                        x.a[site * q + j] = (d % p as u64) as u32;
                        d /= p as u64;
                    }
                    for j in 0..q {
                        x.b[site * q + j] = (d % p as u64) as u32;
                        d /= p as u64;
                    }
                }
                let chord = alpha.apply(&x).and_then(|ax| pauli_distance(&ax, &beta.apply(&x)?));
                match chord {
                    Ok(chord) => {
                        best.operators_checked += 1;
                        let value = chord.value() / size as f64;
                        if value > best.value + 1e-12 {
                            best.value = value;
                            best.chord = chord;
                            best.support_size = size;
                            best.witness =
                                (0..n).filter(|&i| x.a[i] != 0 || x.b[i] != 0).map(|i| (i, x.a[i], x.b[i])).collect();
                        }
                    }
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                }
                let mut k = 0;
                while k < size {
                    digits[k] += 1;
                    if digits[k] < local {
                        break;
                    }
                    digits[k] = 1;
                    k += 1;
                }
                if k == size {
                    break;
                }
            }
        });
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(best),
    }
}
