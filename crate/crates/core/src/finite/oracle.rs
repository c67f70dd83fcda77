//! Brute-force checks on finite lattices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;
use crate::finite::instantiate::{omega, FiniteSymplecticAutomorphism};
use crate::finite::lattice::FiniteLattice;
use crate::finite::linalg::{self, FpSubspace};

/// `(v_x, v_z) ↦ (-v_z, v_x)`, so that `ω(v, w) = J(v)·w`.
fn twist(lattice: &FiniteLattice, v: &[u32]) -> Vec<u32> {
    let half = lattice.vector_len() / 2;
    let p = lattice.p;
    let mut out = Vec::with_capacity(v.len());
    out.extend(v[half..].iter().map(|&x| field::neg(x, p)));
    out.extend_from_slice(&v[..half]);
    out
}

/// `{w : ω(v, w) = 0 for all v ∈ S}`.
pub fn symplectic_complement(s: &FpSubspace, lattice: &FiniteLattice) -> FpSubspace {
    let n = lattice.vector_len();
    if s.dim() == 0 {
        return FpSubspace::full(lattice.p, n);
    }
    let rows: Vec<Vec<u32>> = s.basis().iter().map(|v| twist(lattice, v)).collect();
    FpSubspace::span(lattice.p, n, linalg::nullspace(lattice.p, rows, n))
}

/// Elements of `S` commuting with all of `S`.
pub fn center(s: &FpSubspace, lattice: &FiniteLattice) -> FpSubspace {
    let n = lattice.vector_len();
    if s.dim() == 0 {
        return FpSubspace::zero(lattice.p, n);
    }
    let twisted: Vec<Vec<u32>> = s.basis().iter().map(|v| twist(lattice, v)).collect();
    let gram: Vec<Vec<u32>> =
        twisted.iter().map(|t| s.basis().iter().map(|b| linalg::dot(lattice.p, t, b)).collect()).collect();
    let kernel = linalg::nullspace(lattice.p, gram, s.dim());
    FpSubspace::span(lattice.p, n, kernel.iter().map(|c| s.combine(c)).collect())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiniteInvertibilityReport {
    pub invertible: bool,
    pub dim: usize,
    pub complement_dim: usize,
    pub center_dim: usize,
    pub ambient_dim: usize,
}

/// Invertible on a finite lattice iff the form is nondegenerate on `S`,
/// i.e. `S ∩ S^⊥ = 0`.
pub fn check_invertible_finite(s: &FpSubspace, lattice: &FiniteLattice) -> FiniteInvertibilityReport {
    let complement = symplectic_complement(s, lattice);
    let center_dim = center(s, lattice).dim();
    FiniteInvertibilityReport {
        invertible: center_dim == 0 && s.dim() + complement.dim() == lattice.vector_len(),
        dim: s.dim(),
        complement_dim: complement.dim(),
        center_dim,
        ambient_dim: lattice.vector_len(),
    }
}

fn site_mask(lattice: &FiniteLattice, sites: impl Fn(usize) -> bool) -> Vec<bool> {
    (0..lattice.vector_len()).map(|i| sites(lattice.site_of_index(i))).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VsReport {
    pub holds: bool,
    pub range: usize,
    /// A site where some element of `S` supported there has no local
    /// noncommuting witness.
    pub failing_site: Option<Vec<usize>>,
}

/// Visible simplicity at `range`: at every site `s`, each element of `S`
/// whose support contains `s` fails to commute with some element of
/// `S ∩ Mat(ball(s, range))`. Checked for all elements, not just a basis:
/// the elements with no witness form `K = S ∩ W_s^⊥`, and `K` must vanish at
/// `s`.
pub fn check_vs(s: &FpSubspace, lattice: &FiniteLattice, range: usize) -> VsReport {
    let p = lattice.p;
    for site in 0..lattice.num_sites() {
        let local = s.intersect_coordinates(&site_mask(lattice, |t| lattice.distance(site, t) <= range));
        let kernel = if local.dim() == 0 {
            FpSubspace::full(p, s.dim()).basis().to_vec()
        } else {
            let rows: Vec<Vec<u32>> = local
                .basis()
                .iter()
                .map(|w| {
                    let tw = twist(lattice, w);
                    s.basis().iter().map(|b| linalg::dot(p, &tw, b)).collect()
                })
                .collect();
            linalg::nullspace(p, rows, s.dim())
        };
        let at_site: Vec<usize> = (0..2 * lattice.q).map(|k| lattice.row_index(site, k)).collect();
        let blind = kernel.iter().any(|c| {
            let v = s.combine(c);
            at_site.iter().any(|&i| v[i] != 0)
        });
        if blind {
            return VsReport { holds: false, range, failing_site: Some(lattice.coords(site)) };
        }
    }
    VsReport { holds: true, range, failing_site: None }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CenterReport {
    pub holds: bool,
    pub center_dim: usize,
    pub margin: usize,
    /// Largest distance to the outside among sites where the center is
    /// supported.
    pub deepest_support: usize,
}

/// On an open patch, the center of `S` must live within `margin` of the
/// boundary.
pub fn center_near_boundary(s: &FpSubspace, lattice: &FiniteLattice, margin: usize) -> Result<CenterReport> {
    if lattice.periodic {
        return Err(Error::InvalidLattice("center-at-boundary test needs an open patch".into()));
    }
    let z = center(s, lattice);
    let deepest = z
        .basis()
        .iter()
        .flat_map(|v| lattice.support(v))
        .map(|site| lattice.distance_to_outside(site))
        .max()
        .unwrap_or(0);
    Ok(CenterReport { holds: deepest <= margin, center_dim: z.dim(), margin, deepest_support: deepest })
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryReport {
    pub axis: usize,
    pub cut: usize,
    pub window: usize,
    pub half_space: Vec<usize>,
    pub slab: Vec<usize>,
    pub image_dim: usize,
    pub boundary_dim: usize,
    pub outside_dim: usize,
    /// `α(Mat(H)) = B ⊕ (α(Mat(H)) ∩ Mat(outside the slab))`.
    pub factorizes: bool,
    #[serde(skip)]
    pub boundary: FpSubspace,
}

/// `B(n, ℓ) = α(Mat(H)) ∩ Mat(S)` on a torus, where along `axis`
/// `H = [n-h+1, n]` with `h = L - 3ℓ` and `S = [n-ℓ+1, n+ℓ]`.
pub fn boundary_algebra_finite(
    alpha: &FiniteSymplecticAutomorphism,
    axis: usize,
    cut: usize,
    window: usize,
) -> Result<BoundaryReport> {
    let l = alpha.lattice();
    if axis >= l.dims() {
        return Err(Error::InvalidLattice(format!("axis {axis} out of range")));
    }
    let len = l.sizes[axis];
    let spread = alpha.axis_spread(axis);
    if window < spread.max(1) {
        return Err(Error::TooShort(format!("window {window} is smaller than the spread {spread} along axis {axis}")));
    }
    if len < 5 * window {
        return Err(Error::TooShort(format!("axis length {len} is below 5 x window {window}")));
    }
    let h = len - 3 * window;
    let wrap = |k: i64| k.rem_euclid(len as i64) as usize;
    let n = cut as i64;
    let half_space: Vec<usize> = (n - h as i64 + 1..=n).map(wrap).collect();
    let slab: Vec<usize> = (n - window as i64 + 1..=n + window as i64).map(wrap).collect();
    let mut in_h = vec![false; len];
    for &c in &half_space {
        in_h[c] = true;
    }
    let mut in_s = vec![false; len];
    for &c in &slab {
        in_s[c] = true;
    }
    let image = alpha.image_of_sites((0..l.num_sites()).filter(|&s| in_h[l.coords(s)[axis]]));
    let boundary = image.intersect_coordinates(&site_mask(l, |s| in_s[l.coords(s)[axis]]));
    let outside = image.intersect_coordinates(&site_mask(l, |s| !in_s[l.coords(s)[axis]]));
    Ok(BoundaryReport {
        axis,
        cut,
        window,
        half_space,
        slab,
        image_dim: image.dim(),
        boundary_dim: boundary.dim(),
        outside_dim: outside.dim(),
        factorizes: image.dim() == boundary.dim() + outside.dim(),
        boundary,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlendReport {
    pub holds: bool,
    pub checked_left: usize,
    pub checked_right: usize,
    /// Coordinates and symbol row of the first disagreement.
    pub mismatch: Option<(Vec<usize>, usize)>,
}

/// `γ` agrees with `α` on every single-site basis vector with axis
/// coordinate below `n - ℓ` and with `β` above `n + ℓ`.
pub fn verify_blend(
    gamma: &FiniteSymplecticAutomorphism,
    alpha: &FiniteSymplecticAutomorphism,
    beta: &FiniteSymplecticAutomorphism,
    axis: usize,
    interface: usize,
    margin: usize,
) -> Result<BlendReport> {
    let l = gamma.lattice();
    if alpha.lattice() != l || beta.lattice() != l {
        return Err(Error::InvalidLattice("blend operands live on different lattices".into()));
    }
    if axis >= l.dims() {
        return Err(Error::InvalidLattice(format!("axis {axis} out of range")));
    }
    let (mut left, mut right) = (0, 0);
    for s in 0..l.num_sites() {
        let c = l.coords(s)[axis];
        let reference = if c + margin < interface {
            left += 1;
            alpha
        } else if c > interface + margin {
            right += 1;
            beta
        } else {
            continue;
        };
        for k in 0..2 * l.q {
            let i = l.row_index(s, k);
            if gamma.image(i) != reference.image(i) {
                return Ok(BlendReport {
                    holds: false,
                    checked_left: left,
                    checked_right: right,
                    mismatch: Some((l.coords(s), k)),
                });
            }
        }
    }
    Ok(BlendReport { holds: true, checked_left: left, checked_right: right, mismatch: None })
}

/// Whether every pair of vectors λ-commutes.
pub fn pairwise_commuting(lattice: &FiniteLattice, vs: &[Vec<u32>]) -> bool {
    vs.iter().enumerate().all(|(i, u)| vs[i + 1..].iter().all(|v| omega(lattice, u, v) == 0))
}
