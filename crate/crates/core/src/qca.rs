//! Translation-invariant Clifford QCA as symplectic matrices over the Laurent
//! ring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::pauli::{build_projector, symplectic_form, SubalgebraSpec};

/// `Ū^T λ_q U = λ_q`, exactly.
pub fn is_symplectic(q: usize, u: &LaurentMatrix) -> bool {
    if u.rows() != 2 * q || u.cols() != 2 * q {
        return false;
    }
    let lambda = symplectic_form(u.prime(), u.nvars(), q);
    &(&u.dagger() * &lambda) * u == lambda
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordQCA {
    q: usize,
    matrix: LaurentMatrix,
    /// Variable index of the axis added by [`lift_to_qca`]. The finite
    /// instantiation reads that variable as a unit step toward the negative
    /// end of the axis.
    lift_axis: Option<usize>,
}

impl CliffordQCA {
    pub fn new(q: usize, matrix: LaurentMatrix) -> Result<Self> {
        Self::with_lift_axis(q, matrix, None)
    }

    pub fn with_lift_axis(q: usize, matrix: LaurentMatrix, lift_axis: Option<usize>) -> Result<Self> {
        field::check_prime(matrix.prime())?;
        if matrix.rows() != 2 * q || matrix.cols() != 2 * q {
            return Err(Error::Shape(format!("QCA matrix must be {0}x{0}", 2 * q)));
        }
        if lift_axis.is_some_and(|a| a >= matrix.nvars()) {
            return Err(Error::InvalidSpec("lift axis out of range".into()));
        }
        if !is_symplectic(q, &matrix) {
            return Err(Error::Construction("matrix is not symplectic".into()));
        }
        Ok(CliffordQCA { q, matrix, lift_axis })
    }

    pub fn identity(p: u32, q: usize, dims: usize) -> Self {
        CliffordQCA { q, matrix: LaurentMatrix::identity(p, dims, 2 * q), lift_axis: None }
    }

    /// Shift QCA moving qudit `j` by `shifts[j]`: the same monomial on its X
    /// and Z rows.
    pub fn shift(p: u32, dims: usize, shifts: &[Vec<i32>]) -> Result<Self> {
        let q = shifts.len();
        let mut diag = Vec::with_capacity(2 * q);
        for _ in 0..2 {
            for e in shifts {
                if e.len() != dims {
                    return Err(Error::Shape(format!("shift exponent {e:?} is not {dims}-dimensional")));
                }
                diag.push(LaurentPoly::monomial(p, e.clone(), 1));
            }
        }
        Self::new(q, LaurentMatrix::diagonal(p, dims, diag)?)
    }

    pub fn prime(&self) -> u32 {
        self.matrix.prime()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dims(&self) -> usize {
        self.matrix.nvars()
    }

    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    pub fn lift_axis(&self) -> Option<usize> {
        self.lift_axis
    }

    pub fn spread(&self) -> u32 {
        self.matrix.max_abs_exponent()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.prime() != other.prime() || self.dims() != other.dims() || self.q != other.q {
            return Err(Error::IncompatibleRing("QCA over different rings or site dimensions".into()));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let lift_axis = if self.lift_axis == other.lift_axis { self.lift_axis } else { None };
        Ok(CliffordQCA { q: self.q, matrix: self.matrix.checked_mul(&other.matrix)?, lift_axis })
    }

    /// `λ^{-1} Ū^T λ`.
    pub fn inverse(&self) -> Self {
        let lambda = symplectic_form(self.prime(), self.dims(), self.q);
        let lambda_inv = lambda.neg();
        let matrix = &(&lambda_inv * &self.matrix.dagger()) * &lambda;
        CliffordQCA { q: self.q, matrix, lift_axis: self.lift_axis }
    }

    pub fn to_json_value(&self) -> QcaJson {
        QcaJson {
            prime: self.prime() as u64,
            qudits_per_site: self.q,
            dims: self.dims(),
            lift_axis: self.lift_axis,
            matrix: self.matrix.to_strings(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("QCA serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: QcaJson =
            serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        raw.into_qca()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct QcaJson {
    pub prime: u64,
    pub qudits_per_site: usize,
    pub dims: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift_axis: Option<usize>,
    pub matrix: Vec<Vec<String>>,
}

impl QcaJson {
    pub fn into_qca(self) -> Result<CliffordQCA> {
        if self.prime > u32::MAX as u64 || !field::is_prime(self.prime) {
            return Err(Error::NotPrime(self.prime));
        }
        let p = self.prime as u32;
        let n = 2 * self.qudits_per_site;
        if self.matrix.len() != n || self.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("QCA matrix must be {n}x{n}")));
        }
        let rows: Vec<Vec<&str>> = self.matrix.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        let m = LaurentMatrix::parse_rows(p, self.dims, &rows)?;
        CliffordQCA::with_lift_axis(self.qudits_per_site, m, self.lift_axis)
    }
}

/// `U = Π + z (id - Π)` over the ring with one more variable `z` (the last
/// one).
pub fn lift_to_qca(spec: &SubalgebraSpec) -> Result<CliffordQCA> {
    let pi = build_projector(spec)?.matrix;
    let (p, d, q) = (spec.prime(), spec.dims(), spec.q());
    let pi = pi.extend_vars(d + 1);
    let id = LaurentMatrix::identity(p, d + 1, 2 * q);
    let z = LaurentPoly::var(p, d + 1, d);
    let u = &pi + &(&id - &pi).scale_poly(&z);
    CliffordQCA::with_lift_axis(q, u, Some(d))
}
