use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;
use crate::laurent::{determinantal_profile, IdealSummary, LaurentMatrix, LaurentPoly};
use crate::pauli::spec::SubalgebraSpec;

/// `Ξ = V̄^T λ_q V`.
pub fn commutation_matrix(spec: &SubalgebraSpec) -> LaurentMatrix {
    let v = spec.generators();
    &(&v.dagger() * &spec.lambda()) * v
}

/// `ū^T λ_q v` for two symbols: the coefficient of `x^s` is the commutation
/// exponent of the translate `x^s u` with `v`.
pub fn pairing(q: usize, u: &[LaurentPoly], v: &[LaurentPoly]) -> LaurentPoly {
    let (p, n) = (u[0].prime(), u[0].nvars());
    let mut acc = LaurentPoly::zero(p, n);
    for i in 0..q {
        acc = &acc + &(&u[i].bar() * &v[q + i]);
        acc = &acc - &(&u[q + i].bar() * &v[i]);
    }
    acc
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvertibilityCertificate {
    pub invertible: bool,
    pub num_generators: usize,
    pub rank: usize,
    /// `det Ξ`, present when Ξ has full rank.
    pub determinant: Option<String>,
    pub ideal: IdealSummary,
    pub commutation_matrix: Vec<Vec<String>>,
}

/// Decides invertibility: the smallest nonzero determinantal ideal of Ξ must
/// be the unit ideal.
pub fn check_invertible(spec: &SubalgebraSpec) -> Result<InvertibilityCertificate> {
    let xi = commutation_matrix(spec);
    let mut profile = determinantal_profile(&xi)?;
    let determinant =
        if xi.rows() > 0 && profile.rank == xi.rows() { Some(xi.determinant()?.to_string()) } else { None };
    Ok(InvertibilityCertificate {
        invertible: profile.is_unit,
        num_generators: spec.num_generators(),
        rank: profile.rank,
        determinant,
        ideal: profile.ideal.summary(),
        commutation_matrix: xi.to_strings(),
    })
}

/// Builds `V = (id_n; M)` with `Ξ = M - M̄^T`. For odd `p` the default is
/// `M = Ξ/2`; for `p = 2` an explicit `M` is required.
pub fn from_antihermitian(xi: &LaurentMatrix, m: Option<&LaurentMatrix>) -> Result<SubalgebraSpec> {
    if !xi.is_square() || !xi.is_antihermitian() {
        return Err(Error::NotAntihermitian);
    }
    let (p, d, n) = (xi.prime(), xi.nvars(), xi.rows());
    if n == 0 {
        return Err(Error::Shape("commutation matrix must be at least 1x1".into()));
    }
    let m = match m {
        Some(m) => {
            if m.rows() != n || m.cols() != n || m.prime() != p || m.nvars() != d {
                return Err(Error::Shape("M must match the shape and ring of the commutation matrix".into()));
            }
            if &(m - &m.dagger()) != xi {
                return Err(Error::Construction("supplied M does not satisfy Ξ = M - M̄^T".into()));
            }
            m.clone()
        }
        None => match field::half(p) {
            Some(h) => xi.scale(h),
            None => {
                return Err(Error::Construction("1/2 is not in the ring over F_2; supply M with Ξ = M - M̄^T".into()))
            }
        },
    };
    SubalgebraSpec::new(n, LaurentMatrix::identity(p, d, n).vstack(&m)?)
}

/// `Π` with `Π² = Π`, `ΠV = V` and `V̄^T λ (id - Π) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionProjector {
    pub matrix: LaurentMatrix,
    pub spread: u32,
}

/// `Π = V Ξ^{-1} V̄^T λ_q`, verified exactly before it is returned.
pub fn build_projector(spec: &SubalgebraSpec) -> Result<DecompositionProjector> {
    let (p, d, q) = (spec.prime(), spec.dims(), spec.q());
    let id = LaurentMatrix::identity(p, d, 2 * q);
    if spec.num_generators() == 0 {
        return Ok(DecompositionProjector { matrix: LaurentMatrix::zeros(p, d, 2 * q, 2 * q), spread: 0 });
    }
    let v = spec.generators();
    let lambda = spec.lambda();
    let xi = commutation_matrix(spec);
    let xi_inv = match xi.inverse() {
        Ok(inv) => inv,
        Err(Error::NotInvertible(_)) => {
            return Err(if check_invertible(spec)?.invertible {
                Error::UnsupportedReduction
            } else {
                Error::NotInvertibleSubalgebra
            })
        }
        Err(e) => return Err(e),
    };
    let vdl = &v.dagger() * &lambda;
    let pi = &(v * &xi_inv) * &vdl;
    let complement = &id - &pi;
    if &pi * &pi != pi || &pi * v != *v || !(&vdl * &complement).is_zero() {
        return Err(Error::Construction("projector identities failed".into()));
    }
    let spread = pi.max_abs_exponent();
    Ok(DecompositionProjector { matrix: pi, spread })
}

/// `(id_q; M)` with `n = q` columns, if the generators have that shape.
fn systematic_part(spec: &SubalgebraSpec) -> Option<LaurentMatrix> {
    let q = spec.q();
    if spec.num_generators() != q {
        return None;
    }
    let v = spec.generators();
    let top: Vec<usize> = (0..q).collect();
    let bottom: Vec<usize> = (q..2 * q).collect();
    if v.select(&top, &top) != LaurentMatrix::identity(spec.prime(), spec.dims(), q) {
        return None;
    }
    Some(v.select(&bottom, &top))
}

/// Generators of the commutant within the full algebra.
///
/// For `V = (id; M)` the commutant is exactly the column span of
/// `(id; M̄^T)`; this holds whether or not the subalgebra is invertible.
/// Otherwise the nonzero columns of `id - Π` are returned.
pub fn commutant_generators(spec: &SubalgebraSpec) -> Result<SubalgebraSpec> {
    let (p, d, q) = (spec.prime(), spec.dims(), spec.q());
    if let Some(m) = systematic_part(spec) {
        return SubalgebraSpec::new(q, LaurentMatrix::identity(p, d, q).vstack(&m.dagger())?);
    }
    let pi = build_projector(spec)?;
    let complement = &LaurentMatrix::identity(p, d, 2 * q) - &pi.matrix;
    let cols: Vec<Vec<LaurentPoly>> =
        (0..2 * q).map(|j| complement.column(j)).filter(|c| c.iter().any(|f| !f.is_zero())).collect();
    SubalgebraSpec::new(q, LaurentMatrix::from_columns(p, d, 2 * q, cols)?)
}

/// Whether the symbol `w` lies in the 𝔑-column span of the generators.
///
/// Decided exactly for systematic generators (`w = (a; b)` is in the span of
/// `(id; M)` iff `b = M a`) and for specs with a projector (`w ∈ im Π` iff
/// `Π w = w`).
pub fn span_contains(spec: &SubalgebraSpec, w: &[LaurentPoly]) -> Result<bool> {
    let q = spec.q();
    if w.len() != 2 * q {
        return Err(Error::Shape(format!("symbol has {} entries, expected {}", w.len(), 2 * q)));
    }
    let (p, d) = (spec.prime(), spec.dims());
    let col = LaurentMatrix::from_columns(p, d, 2 * q, vec![w.to_vec()])?;
    if let Some(m) = systematic_part(spec) {
        let top: Vec<usize> = (0..q).collect();
        let bottom: Vec<usize> = (q..2 * q).collect();
        let a = col.select(&top, &[0]);
        let b = col.select(&bottom, &[0]);
        return Ok(m.checked_mul(&a)? == b);
    }
    let pi = build_projector(spec)?;
    Ok(pi.matrix.checked_mul(&col)? == col)
}

/// Mutual column-span membership.
pub fn same_span(a: &SubalgebraSpec, b: &SubalgebraSpec) -> Result<bool> {
    if a.prime() != b.prime() || a.dims() != b.dims() || a.q() != b.q() {
        return Err(Error::IncompatibleRing("specs over different rings or site dimensions".into()));
    }
    for j in 0..b.num_generators() {
        if !span_contains(a, &b.generator(j))? {
            return Ok(false);
        }
    }
    for j in 0..a.num_generators() {
        if !span_contains(b, &a.generator(j))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `w` into `(Π w, (id - Π) w)`.
pub fn decompose_local(
    projector: &DecompositionProjector,
    w: &[LaurentPoly],
) -> Result<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    let pi = &projector.matrix;
    if w.len() != pi.rows() {
        return Err(Error::Shape(format!("symbol has {} entries, expected {}", w.len(), pi.rows())));
    }
    let col = LaurentMatrix::from_columns(pi.prime(), pi.nvars(), pi.rows(), vec![w.to_vec()])?;
    let a = pi.checked_mul(&col)?;
    let b = col.checked_sub(&a)?;
    Ok((a.column(0), b.column(0)))
}

/// Reorders rows `(X_1; Z_1)` and `(X_2; Z_2)` into `(X_1; X_2; Z_1; Z_2)`.
fn interleave(q1: usize, q2: usize, m: &LaurentMatrix) -> LaurentMatrix {
    let mut order: Vec<usize> = (0..q1).collect();
    order.extend(2 * q1..2 * q1 + q2);
    order.extend(q1..2 * q1);
    order.extend(2 * q1 + q2..2 * (q1 + q2));
    let cols: Vec<usize> = (0..m.cols()).collect();
    m.select(&order, &cols)
}

/// Tensor product: qudits of `s1` then `s2` on each site, generators of
/// `s1` then `s2`. The commutation matrix is `Ξ_1 ⊕ Ξ_2`.
pub fn brauer_tensor(s1: &SubalgebraSpec, s2: &SubalgebraSpec) -> Result<SubalgebraSpec> {
    if s1.prime() != s2.prime() || s1.dims() != s2.dims() {
        return Err(Error::IncompatibleRing(format!(
            "tensor of F_{} in {}D with F_{} in {}D",
            s1.prime(),
            s1.dims(),
            s2.prime(),
            s2.dims()
        )));
    }
    let stacked = s1.generators().block_diag(s2.generators())?;
    SubalgebraSpec::new(s1.q() + s2.q(), interleave(s1.q(), s2.q(), &stacked))
}

/// Matrix form of the same row permutation, used to compare lifts.
pub fn tensor_permutation(p: u32, nvars: usize, q1: usize, q2: usize) -> LaurentMatrix {
    interleave(q1, q2, &LaurentMatrix::identity(p, nvars, 2 * (q1 + q2)))
}
