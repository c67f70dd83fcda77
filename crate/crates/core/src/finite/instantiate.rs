//! Evaluating translation classes on a finite lattice: each variable acts as
//! a unit translation along its axis.

use crate::error::{Error, Result};
use crate::field;
use crate::finite::lattice::FiniteLattice;
use crate::finite::linalg::{self, FpSubspace};
use crate::laurent::LaurentPoly;
use crate::pauli::SubalgebraSpec;
use crate::qca::CliffordQCA;

/// The vector of the translate of `symbol` anchored at `site`. `embed` maps a
/// symbol exponent to a lattice displacement. Returns `None` on a patch when
/// some term falls outside.
fn place(
    lattice: &FiniteLattice,
    symbol: &[LaurentPoly],
    site: usize,
    embed: &dyn Fn(&[i32]) -> Vec<i64>,
) -> Option<Vec<u32>> {
    let p = lattice.p;
    let mut v = vec![0u32; lattice.vector_len()];
    for (k, f) in symbol.iter().enumerate() {
        for (e, c) in f.terms() {
            let target = lattice.translate(site, &embed(e))?;
            let idx = lattice.row_index(target, k);
            v[idx] = field::add(v[idx], c, p);
        }
    }
    Some(v)
}

fn identity_embed(e: &[i32]) -> Vec<i64> {
    e.iter().map(|&x| x as i64).collect()
}

/// The vector of a symbol anchored at `site`, or `None` if it leaves a patch.
pub fn symbol_vector(lattice: &FiniteLattice, symbol: &[LaurentPoly], site: usize) -> Option<Vec<u32>> {
    place(lattice, symbol, site, &identity_embed)
}

fn check_lattice(spec: &SubalgebraSpec, lattice: &FiniteLattice, dims: usize) -> Result<()> {
    if spec.prime() != lattice.p || spec.q() != lattice.q || dims != lattice.dims() {
        return Err(Error::InvalidLattice(format!(
            "lattice (p={}, q={}, {}D) does not match (p={}, q={}, {}D)",
            lattice.p,
            lattice.q,
            lattice.dims(),
            spec.prime(),
            spec.q(),
            dims
        )));
    }
    Ok(())
}

/// Translates of each generator that fit on the lattice.
pub fn generator_translates(spec: &SubalgebraSpec, lattice: &FiniteLattice) -> Result<Vec<Vec<u32>>> {
    check_lattice(spec, lattice, spec.dims())?;
    let mut out = Vec::new();
    for j in 0..spec.num_generators() {
        let col = spec.generator(j);
        if col.iter().all(LaurentPoly::is_zero) {
            continue;
        }
        let before = out.len();
        out.extend((0..lattice.num_sites()).filter_map(|s| symbol_vector(lattice, &col, s)));
        if out.len() == before {
            return Err(Error::InvalidLattice(format!(
                "generator {j} does not fit on {}: its footprint is larger than the patch",
                lattice.describe()
            )));
        }
    }
    Ok(out)
}

/// Span of all translates of all generators.
pub fn instantiate_spec(spec: &SubalgebraSpec, lattice: &FiniteLattice) -> Result<FpSubspace> {
    let vs = generator_translates(spec, lattice)?;
    Ok(FpSubspace::span(lattice.p, lattice.vector_len(), vs))
}

/// Translates of a `D`-dimensional spec within the sheet `coord` of a
/// `(D+1)`-dimensional lattice, the spec's axes filling the remaining ones.
pub fn instantiate_spec_on_sheet(
    spec: &SubalgebraSpec,
    lattice: &FiniteLattice,
    axis: usize,
    coord: usize,
) -> Result<FpSubspace> {
    check_lattice(spec, lattice, spec.dims() + 1)?;
    if axis >= lattice.dims() || coord >= lattice.sizes[axis] {
        return Err(Error::InvalidLattice(format!("no sheet {coord} along axis {axis}")));
    }
    let embed = move |e: &[i32]| {
        let mut d: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        d.insert(axis, 0);
        d
    };
    let mut vs = Vec::new();
    for j in 0..spec.num_generators() {
        let col = spec.generator(j);
        for s in (0..lattice.num_sites()).filter(|&s| lattice.coords(s)[axis] == coord) {
            if let Some(v) = place(lattice, &col, s, &embed) {
                vs.push(v);
            }
        }
    }
    Ok(FpSubspace::span(lattice.p, lattice.vector_len(), vs))
}

/// Global symplectic pairing `u_x·v_z - u_z·v_x`.
pub fn omega(lattice: &FiniteLattice, u: &[u32], v: &[u32]) -> u32 {
    let half = lattice.vector_len() / 2;
    let p = lattice.p;
    field::sub(linalg::dot(p, &u[..half], &v[half..]), linalg::dot(p, &u[half..], &v[..half]), p)
}

/// A linear automorphism of `F_p^{2qN}` given by the images of the standard
/// basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSymplecticAutomorphism {
    lattice: FiniteLattice,
    images: Vec<Vec<u32>>,
}

impl FiniteSymplecticAutomorphism {
    pub fn from_images(lattice: FiniteLattice, images: Vec<Vec<u32>>) -> Result<Self> {
        let n = lattice.vector_len();
        if images.len() != n || images.iter().any(|v| v.len() != n) {
            return Err(Error::Shape(format!("need {n} images of length {n}")));
        }
        Ok(FiniteSymplecticAutomorphism { lattice, images })
    }

    pub fn identity(lattice: FiniteLattice) -> Self {
        let images = FpSubspace::full(lattice.p, lattice.vector_len()).basis().to_vec();
        FiniteSymplecticAutomorphism { lattice, images }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn image(&self, i: usize) -> &[u32] {
        &self.images[i]
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }

    pub fn set_image(&mut self, i: usize, v: Vec<u32>) {
        self.images[i] = v;
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.lattice.p as u64;
        let mut out = vec![0u64; v.len()];
        for (&c, img) in v.iter().zip(&self.images) {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(img) {
                    *o = (*o + c as u64 * x as u64) % p;
                }
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Image of every basis vector on the given sites.
    pub fn image_of_sites(&self, sites: impl Iterator<Item = usize>) -> FpSubspace {
        let l = &self.lattice;
        let mut vs = Vec::new();
        for s in sites {
            for k in 0..2 * l.q {
                vs.push(self.images[l.row_index(s, k)].clone());
            }
        }
        FpSubspace::span(l.p, l.vector_len(), vs)
    }

    /// Largest displacement along `axis` between a site and the support of
    /// its image.
    pub fn axis_spread(&self, axis: usize) -> usize {
        let l = &self.lattice;
        let mut best = 0;
        for (i, img) in self.images.iter().enumerate() {
            let s = l.site_of_index(i);
            for t in l.support(img) {
                best = best.max(l.displacement(s, t, axis).unsigned_abs() as usize);
            }
        }
        best
    }

    pub fn is_symplectic(&self) -> bool {
        let l = &self.lattice;
        let n = l.vector_len();
        let sparse: Vec<Vec<(usize, u32)>> = self
            .images
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect())
            .collect();
        let half = n / 2;
        let p = l.p;
        let pair = |u: &[(usize, u32)], v: &[u32]| {
            let mut acc = 0u32;
            for &(i, x) in u {
                let (j, sign_neg) = if i < half { (i + half, false) } else { (i - half, true) };
                let t = field::mul(x, v[j], p);
                acc = if sign_neg { field::sub(acc, t, p) } else { field::add(acc, t, p) };
            }
            acc
        };
        for (i, row) in sparse.iter().enumerate() {
            for j in 0..n {
                let expected = if j == i + half {
                    1
                } else if i == j + half {
                    p - 1
                } else {
                    0
                };
                if pair(row, &self.images[j]) != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Block-circulant instantiation of a QCA on a torus. For a lifted QCA the
/// lift variable is read as a step toward the negative end of its axis.
pub fn instantiate_qca(qca: &CliffordQCA, lattice: &FiniteLattice) -> Result<FiniteSymplecticAutomorphism> {
    if qca.prime() != lattice.p || qca.q() != lattice.q || qca.dims() != lattice.dims() {
        return Err(Error::InvalidLattice("lattice does not match the QCA".into()));
    }
    if !lattice.periodic {
        return Err(Error::InvalidLattice("QCA are instantiated on tori only".into()));
    }
    let lift = qca.lift_axis();
    let embed = move |e: &[i32]| {
        e.iter().enumerate().map(|(i, &x)| if Some(i) == lift { -(x as i64) } else { x as i64 }).collect()
    };
    let q = lattice.q;
    let mut images = vec![Vec::new(); lattice.vector_len()];
    for k in 0..2 * q {
        let col = qca.matrix().column(k);
        for s in 0..lattice.num_sites() {
            images[lattice.row_index(s, k)] = place(lattice, &col, s, &embed).expect("torus placement");
        }
    }
    FiniteSymplecticAutomorphism::from_images(lattice.clone(), images)
}
