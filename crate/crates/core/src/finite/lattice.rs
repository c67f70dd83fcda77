use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;

/// A finite box of sites, periodic (torus) or with open boundary (patch).
///
/// Sites are numbered row-major with axis 0 varying fastest. A vector in
/// `F_p^{2qN}` stores the X exponent of qudit `j` at site `s` at index
/// `s*q + j` and the Z exponent at `q*N + s*q + j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteLattice {
    pub p: u32,
    pub q: usize,
    pub sizes: Vec<usize>,
    pub periodic: bool,
}

impl FiniteLattice {
    fn build(p: u32, q: usize, sizes: Vec<usize>, periodic: bool) -> Result<Self> {
        field::check_prime(p)?;
        if q == 0 {
            return Err(Error::InvalidLattice("need at least one qudit per site".into()));
        }
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidLattice(format!("sizes must be positive, got {sizes:?}")));
        }
        if sizes.iter().product::<usize>() > 1 << 20 {
            return Err(Error::InvalidLattice("lattice too large for dense linear algebra".into()));
        }
        Ok(FiniteLattice { p, q, sizes, periodic })
    }

    pub fn torus(p: u32, q: usize, sizes: Vec<usize>) -> Result<Self> {
        Self::build(p, q, sizes, true)
    }

    pub fn patch(p: u32, q: usize, sizes: Vec<usize>) -> Result<Self> {
        Self::build(p, q, sizes, false)
    }

    pub fn dims(&self) -> usize {
        self.sizes.len()
    }

    pub fn num_sites(&self) -> usize {
        self.sizes.iter().product()
    }

    /// Length of a Pauli exponent vector, `2qN`.
    pub fn vector_len(&self) -> usize {
        2 * self.q * self.num_sites()
    }

    pub fn x_index(&self, site: usize, j: usize) -> usize {
        site * self.q + j
    }

    pub fn z_index(&self, site: usize, j: usize) -> usize {
        self.q * self.num_sites() + site * self.q + j
    }

    /// Index of symbol row `k` (`k < q` is X, otherwise Z) at `site`.
    pub fn row_index(&self, site: usize, k: usize) -> usize {
        if k < self.q {
            self.x_index(site, k)
        } else {
            self.z_index(site, k - self.q)
        }
    }

    pub fn site_of_index(&self, idx: usize) -> usize {
        (idx % (self.q * self.num_sites())) / self.q
    }

    pub fn coords(&self, mut site: usize) -> Vec<usize> {
        let mut c = Vec::with_capacity(self.dims());
        for &l in &self.sizes {
            c.push(site % l);
            site /= l;
        }
        c
    }

    pub fn site(&self, coords: &[usize]) -> usize {
        let mut s = 0;
        for (c, l) in coords.iter().zip(&self.sizes).rev() {
            s = s * l + c;
        }
        s
    }

    /// `site + delta`, wrapping on a torus; `None` if it leaves a patch.
    pub fn translate(&self, site: usize, delta: &[i64]) -> Option<usize> {
        let mut c = self.coords(site);
        for ((ci, &d), &l) in c.iter_mut().zip(delta).zip(&self.sizes) {
            let v = *ci as i64 + d;
            if self.periodic {
                *ci = v.rem_euclid(l as i64) as usize;
            } else if v < 0 || v >= l as i64 {
                return None;
            } else {
                *ci = v as usize;
            }
        }
        Some(self.site(&c))
    }

    /// Signed displacement from `a` to `b` along `axis`, taking the shorter
    /// way round on a torus.
    pub fn displacement(&self, a: usize, b: usize, axis: usize) -> i64 {
        let l = self.sizes[axis] as i64;
        let d = self.coords(b)[axis] as i64 - self.coords(a)[axis] as i64;
        if self.periodic {
            let d = d.rem_euclid(l);
            if d > l / 2 {
                d - l
            } else {
                d
            }
        } else {
            d
        }
    }

    /// ∞-norm distance.
    pub fn distance(&self, a: usize, b: usize) -> usize {
        (0..self.dims()).map(|i| self.displacement(a, b, i).unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Distance from `site` to the nearest site outside a patch (`usize::MAX`
    /// on a torus).
    pub fn distance_to_outside(&self, site: usize) -> usize {
        if self.periodic {
            return usize::MAX;
        }
        self.coords(site).iter().zip(&self.sizes).map(|(&c, &l)| (c + 1).min(l - c)).min().unwrap()
    }

    /// Sites carrying a nonzero component of `v`.
    pub fn support(&self, v: &[u32]) -> Vec<usize> {
        let mut s: Vec<usize> =
            v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| self.site_of_index(i)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Smallest size divided by `spread` (infinite if spread is 0).
    pub fn size_spread_ratio(&self, spread: u32) -> f64 {
        let min = *self.sizes.iter().min().unwrap() as f64;
        if spread == 0 {
            f64::INFINITY
        } else {
            min / spread as f64
        }
    }

    pub fn describe(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(usize::to_string).collect();
        format!("{} {}", if self.periodic { "torus" } else { "patch" }, sizes.join("x"))
    }
}
