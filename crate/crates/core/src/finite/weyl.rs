//! Phase-tracked Weyl operators `ζ^c X^a Z^b`.
//!
//! For odd `p` the phase is `ζ = ω = e^{2πi/p}` and `c ∈ Z_p`. For `p = 2`
//! phases live in `Z_4` with `ζ = i`, so that `Y = i X Z` is representable.
//! With `κ = m/p` (`m` the phase modulus) the product rule is
//! `(c1,a1,b1)(c2,a2,b2) = (c1 + c2 + κ b1·a2, a1 + a2, b1 + b2)`, which
//! gives `ZX = ω XZ`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;
use crate::finite::instantiate::FiniteSymplecticAutomorphism;

pub fn phase_modulus(p: u32) -> u32 {
    if p == 2 {
        4
    } else {
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhasedPauli {
    pub p: u32,
    pub c: u32,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

fn dot_mod(p: u32, u: &[u32], v: &[u32]) -> u64 {
    u.iter().zip(v).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % p as u64
}

impl PhasedPauli {
    pub fn identity(p: u32, n: usize) -> Self {
        PhasedPauli { p, c: 0, a: vec![0; n], b: vec![0; n] }
    }

    /// From an `F_p^{2n}` vector laid out as `(x‖z)`.
    pub fn from_vector(p: u32, c: u32, v: &[u32]) -> Self {
        let n = v.len() / 2;
        PhasedPauli { p, c: c % phase_modulus(p), a: v[..n].to_vec(), b: v[n..].to_vec() }
    }

    pub fn x(p: u32, n: usize, i: usize) -> Self {
        let mut w = Self::identity(p, n);
        w.a[i] = 1;
        w
    }

    pub fn z(p: u32, n: usize, i: usize) -> Self {
        let mut w = Self::identity(p, n);
        w.b[i] = 1;
        w
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn modulus(&self) -> u32 {
        phase_modulus(self.p)
    }

    fn kappa(&self) -> u64 {
        (self.modulus() / self.p) as u64
    }

    pub fn to_vector(&self) -> Vec<u32> {
        let mut v = self.a.clone();
        v.extend_from_slice(&self.b);
        v
    }

    pub fn is_scalar(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.len() != other.len() {
            return Err(Error::IncompatibleRing("Pauli operators on different systems".into()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (p, m) = (self.p, self.modulus() as u64);
        let c = (self.c as u64 + other.c as u64 + self.kappa() * dot_mod(p, &self.b, &other.a)) % m;
        Ok(PhasedPauli {
            p,
            c: c as u32,
            a: self.a.iter().zip(&other.a).map(|(&x, &y)| field::add(x, y, p)).collect(),
            b: self.b.iter().zip(&other.b).map(|(&x, &y)| field::add(x, y, p)).collect(),
        })
    }

    /// Adjoint: `(-c + κ a·b, -a, -b)`.
    pub fn dagger(&self) -> Self {
        let (p, m) = (self.p, self.modulus() as u64);
        let c = (m - self.c as u64 % m + self.kappa() * dot_mod(p, &self.a, &self.b)) % m;
        PhasedPauli {
            p,
            c: c as u32,
            a: self.a.iter().map(|&x| field::neg(x, p)).collect(),
            b: self.b.iter().map(|&x| field::neg(x, p)).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.p, self.len());
        for _ in 0..k {
            acc = acc.mul(self).expect("same system");
        }
        acc
    }

    /// Multiplies by `ζ^k`.
    pub fn with_phase(&self, k: u32) -> Self {
        let mut w = self.clone();
        w.c = (w.c + k) % self.modulus();
        w
    }

    /// `e` with `u v = ζ^e v u`, namely `κ (b_u·a_v - b_v·a_u)`.
    pub fn commutation_exponent(&self, other: &Self) -> Result<u32> {
        self.check(other)?;
        let p = self.p;
        let m = self.modulus() as u64;
        let d = field::sub(dot_mod(p, &self.b, &other.a) as u32, dot_mod(p, &other.b, &self.a) as u32, p);
        Ok((self.kappa() * d as u64 % m) as u32)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.commutation_exponent(other)? == 0)
    }
}

/// An automorphism of the Pauli group on `n = qN` qudits, given by the images
/// of every `X_i` and `Z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasedAutomorphism {
    p: u32,
    images_x: Vec<PhasedPauli>,
    images_z: Vec<PhasedPauli>,
}

impl PhasedAutomorphism {
    pub fn new(images_x: Vec<PhasedPauli>, images_z: Vec<PhasedPauli>) -> Result<Self> {
        let n = images_x.len();
        let Some(first) = images_x.first() else {
            return Err(Error::Shape("automorphism on zero qudits".into()));
        };
        let p = first.p;
        if images_z.len() != n || images_x.iter().chain(&images_z).any(|w| w.p != p || w.len() != n) {
            return Err(Error::Shape("images must act on the same number of qudits".into()));
        }
        let alpha = PhasedAutomorphism { p, images_x, images_z };
        if !alpha.is_valid() {
            return Err(Error::Construction("images do not satisfy the Weyl relations".into()));
        }
        Ok(alpha)
    }

    pub fn identity(p: u32, n: usize) -> Self {
        PhasedAutomorphism {
            p,
            images_x: (0..n).map(|i| PhasedPauli::x(p, n, i)).collect(),
            images_z: (0..n).map(|i| PhasedPauli::z(p, n, i)).collect(),
        }
    }

    /// Lifts a finite symplectic map with the phase that keeps each image of
    /// order `p` (for `p = 2`: Hermitian).
    pub fn from_symplectic(alpha: &FiniteSymplecticAutomorphism) -> Result<Self> {
        let l = alpha.lattice();
        let (p, n) = (l.p, l.vector_len() / 2);
        let lift = |v: &[u32]| {
            let w = PhasedPauli::from_vector(p, 0, v);
            if p == 2 {
                let ab = dot_mod(2, &w.a, &w.b) as u32;
                w.with_phase(ab)
            } else {
                w
            }
        };
        Self::new((0..n).map(|i| lift(alpha.image(i))).collect(), (0..n).map(|i| lift(alpha.image(n + i))).collect())
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn num_qudits(&self) -> usize {
        self.images_x.len()
    }

    pub fn image_x(&self, i: usize) -> &PhasedPauli {
        &self.images_x[i]
    }

    pub fn image_z(&self, i: usize) -> &PhasedPauli {
        &self.images_z[i]
    }

    /// Images obey the same commutation exponents as `X_i, Z_i` and have
    /// `W^p = 1` (`W^2 = 1` for qubits).
    pub fn is_valid(&self) -> bool {
        let n = self.num_qudits();
        let order = self.p as u64;
        let all: Vec<(&PhasedPauli, PhasedPauli)> = self
            .images_x
            .iter()
            .zip((0..n).map(|i| PhasedPauli::x(self.p, n, i)))
            .chain(self.images_z.iter().zip((0..n).map(|i| PhasedPauli::z(self.p, n, i))))
            .collect();
        for (img, _) in &all {
            let w = img.pow(order);
            if !w.is_scalar() || w.c != 0 {
                return false;
            }
        }
        for (i, (u, u0)) in all.iter().enumerate() {
            for (v, v0) in &all[i + 1..] {
                if u.commutation_exponent(v).ok() != u0.commutation_exponent(v0).ok() {
                    return false;
                }
            }
        }
        true
    }

    /// `α(ζ^c X^a Z^b) = ζ^c Π α(X_i)^{a_i} Π α(Z_i)^{b_i}`.
    pub fn apply(&self, w: &PhasedPauli) -> Result<PhasedPauli> {
        if w.p != self.p || w.len() != self.num_qudits() {
            return Err(Error::IncompatibleRing("operator and automorphism on different systems".into()));
        }
        let mut acc = PhasedPauli::identity(self.p, w.len()).with_phase(w.c);
        for (img, &k) in self.images_x.iter().zip(&w.a).chain(self.images_z.iter().zip(&w.b)) {
            for _ in 0..k {
                acc = acc.mul(img)?;
            }
        }
        Ok(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let images_x = other.images_x.iter().map(|w| self.apply(w)).collect::<Result<_>>()?;
        let images_z = other.images_z.iter().map(|w| self.apply(w)).collect::<Result<_>>()?;
        Ok(PhasedAutomorphism { p: self.p, images_x, images_z })
    }

    /// Fourier gate on qudit `i`: `X ↦ Z`, `Z ↦ X^{-1}` (Hadamard for qubits).
    pub fn fourier(p: u32, n: usize, i: usize) -> Self {
        let mut g = Self::identity(p, n);
        g.images_x[i] = PhasedPauli::z(p, n, i);
        g.images_z[i] = PhasedPauli::x(p, n, i).pow(p as u64 - 1);
        g
    }

    /// Phase gate on qudit `i`: `X ↦ XZ` (`X ↦ Y = iXZ` for qubits).
    pub fn phase_gate(p: u32, n: usize, i: usize) -> Self {
        let mut g = Self::identity(p, n);
        let xz = PhasedPauli::x(p, n, i).mul(&PhasedPauli::z(p, n, i)).unwrap();
        g.images_x[i] = if p == 2 { xz.with_phase(1) } else { xz };
        g
    }

    /// Controlled sum `|j,k⟩ ↦ |j, j+k⟩`: `X_c ↦ X_c X_t`, `Z_t ↦ Z_c^{-1} Z_t`.
    pub fn controlled_sum(p: u32, n: usize, control: usize, target: usize) -> Self {
        let mut g = Self::identity(p, n);
        g.images_x[control] = PhasedPauli::x(p, n, control).mul(&PhasedPauli::x(p, n, target)).unwrap();
        let zc_inv = PhasedPauli::z(p, n, control).pow(p as u64 - 1);
        g.images_z[target] = zc_inv.mul(&PhasedPauli::z(p, n, target)).unwrap();
        g
    }

    /// Conjugation `Q ↦ P Q P^†`.
    pub fn conjugation(pauli: &PhasedPauli) -> Self {
        let (p, n) = (pauli.p, pauli.len());
        let mut g = Self::identity(p, n);
        for img in g.images_x.iter_mut().chain(g.images_z.iter_mut()) {
            let e = pauli.commutation_exponent(img).unwrap();
            *img = img.with_phase(e);
        }
        g
    }

    /// Conjugation by `X` on every qudit.
    pub fn global_x_flip(p: u32, n: usize) -> Self {
        let mut all_x = PhasedPauli::identity(p, n);
        all_x.a.iter_mut().for_each(|a| *a = 1);
        Self::conjugation(&all_x)
    }

    /// A random Clifford circuit of up to `depth` gates.
    pub fn random<R: Rng>(p: u32, n: usize, depth: usize, rng: &mut R) -> Self {
        let mut g = Self::identity(p, n);
        for _ in 0..rng.gen_range(0..=depth) {
            let i = rng.gen_range(0..n);
            let gate = match rng.gen_range(0..4) {
                0 => Self::fourier(p, n, i),
                1 => Self::phase_gate(p, n, i),
                2 if n > 1 => {
                    let t = (i + rng.gen_range(1..n)) % n;
                    Self::controlled_sum(p, n, i, t)
                }
                _ => {
                    let mut w = PhasedPauli::identity(p, n);
                    w.a[i] = rng.gen_range(0..p);
                    w.b[i] = rng.gen_range(0..p);
                    Self::conjugation(&w)
                }
            };
            g = gate.compose(&g).expect("same system");
        }
        g
    }
}
