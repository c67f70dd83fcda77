use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::poly::LaurentPoly;

/// Dense rectangular matrix of Laurent polynomials sharing one ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentMatrix {
    p: u32,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(p: u32, nvars: usize, rows: usize, cols: usize) -> Self {
        LaurentMatrix { p, nvars, rows, cols, entries: vec![LaurentPoly::zero(p, nvars); rows * cols] }
    }

    pub fn identity(p: u32, nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(p, nvars, n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(p, nvars);
        }
        m
    }

    pub fn diagonal(p: u32, nvars: usize, diag: Vec<LaurentPoly>) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(p, nvars, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d)?;
        }
        Ok(m)
    }

    /// Builds from row-major rows; all entries must share `p` and `nvars`.
    pub fn from_rows(p: u32, nvars: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, nvars, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j, e)?;
            }
        }
        Ok(m)
    }

    pub fn from_columns(p: u32, nvars: usize, rows: usize, cols: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let mut m = Self::zeros(p, nvars, rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!("column {j} has {} entries, expected {rows}", col.len())));
            }
            for (i, e) in col.into_iter().enumerate() {
                m.set(i, j, e)?;
            }
        }
        Ok(m)
    }

    /// Parses a row-major grid of polynomial strings.
    pub fn parse_rows(p: u32, nvars: usize, rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| LaurentPoly::parse(s, p, nvars)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(p, nvars, parsed)
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) -> Result<()> {
        if v.prime() != self.p || v.nvars() != self.nvars {
            return Err(Error::IncompatibleRing(format!(
                "entry over F_{}[{} vars] in a matrix over F_{}[{} vars]",
                v.prime(),
                v.nvars(),
                self.p,
                self.nvars
            )));
        }
        let c = self.cols;
        self.entries[i * c + j] = v;
        Ok(())
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn column_matrix(&self, j: usize) -> LaurentMatrix {
        self.select(&(0..self.rows).collect::<Vec<_>>(), &[j])
    }

    pub fn row(&self, i: usize) -> Vec<LaurentPoly> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> LaurentMatrix {
        let mut m = Self::zeros(self.p, self.nvars, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.entries[a * cols.len() + b] = self[(i, j)].clone();
            }
        }
        m
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.nvars != other.nvars {
            return Err(Error::IncompatibleRing(format!(
                "F_{}[{} vars] vs F_{}[{} vars]",
                self.p, self.nvars, other.p, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.p, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> Result<Self> {
        self.check_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = self.clone();
        for (o, b) in out.entries.iter_mut().zip(&other.entries) {
            *o = f(o, b);
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e)
    }

    pub fn scale(&self, c: u32) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_poly(&self, f: &LaurentPoly) -> Self {
        self.map(|e| e * f)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = f(e);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.p, self.nvars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Conjugate transpose: apply the bar involution entrywise and transpose.
    pub fn dagger(&self) -> Self {
        self.transpose().map(LaurentPoly::bar)
    }

    pub fn is_antihermitian(&self) -> bool {
        self.is_square() && self.dagger() == self.neg()
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.cols {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(LaurentMatrix { p: self.p, nvars: self.nvars, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// `[self, other]`
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        Ok(self.transpose().vstack(&other.transpose())?.transpose())
    }

    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut m = Self::zeros(self.p, self.nvars, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(m)
    }

    pub fn extend_vars(&self, nvars: usize) -> Self {
        let mut out = self.map(|e| e.extend_vars(nvars));
        out.nvars = nvars;
        out
    }

    /// Largest `|exponent|` over all entries.
    pub fn max_abs_exponent(&self) -> u32 {
        self.entries.iter().map(LaurentPoly::max_abs_exponent).max().unwrap_or(0)
    }

    /// Determinant by cofactor expansion with memoisation over column
    /// subsets; exact, intended for the small matrices of this crate.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(self.p, self.nvars));
        }
        if n > 20 {
            return Err(Error::Shape("determinant limited to 20x20".into()));
        }
        // dp[mask] = det of rows (n - |mask|)..n restricted to columns in mask
        let mut dp: Vec<Option<LaurentPoly>> = vec![None; 1 << n];
        dp[0] = Some(LaurentPoly::one(self.p, self.nvars));
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = LaurentPoly::zero(self.p, self.nvars);
            let mut sign_pos = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = &self[(row, j)];
                if !a.is_zero() {
                    let sub = dp[mask & !(1 << j)].as_ref().unwrap();
                    if !sub.is_zero() {
                        let t = a * sub;
                        acc = if sign_pos % 2 == 0 { &acc + &t } else { &acc - &t };
                    }
                }
                sign_pos += 1;
            }
            dp[mask] = Some(acc);
        }
        Ok(dp[(1 << n) - 1].take().unwrap())
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<LaurentPoly> {
        self.select(rows, cols).determinant()
    }

    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut adj = Self::zeros(self.p, self.nvars, n, n);
        if n == 1 {
            adj[(0, 0)] = LaurentPoly::one(self.p, self.nvars);
            return Ok(adj);
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let m = self.minor(&rows, &cols)?;
                adj[(i, j)] = if (i + j) % 2 == 0 { m } else { -&m };
            }
        }
        Ok(adj)
    }

    /// Exact inverse; requires the determinant to be a Laurent unit
    /// (a single nonzero term).
    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant()?;
        let (e, c) = match det.as_monomial() {
            Some((e, c)) => (e.clone(), c),
            None => return Err(Error::NotInvertible(format!("determinant {det} is not a unit"))),
        };
        let inv_det =
            LaurentPoly::monomial(self.p, e.iter().map(|v| -v).collect(), crate::field::inv(c, self.p) as i64);
        Ok(self.adjugate()?.scale_poly(&inv_det))
    }

    /// Row-major grid of printed entries.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.to_string()).collect()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl std::ops::Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        self.checked_mul(rhs).expect("matrix product shape or ring mismatch")
    }
}

impl std::ops::Add for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        self.checked_add(rhs).expect("matrix sum shape or ring mismatch")
    }
}

impl std::ops::Sub for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        self.checked_sub(rhs).expect("matrix difference shape or ring mismatch")
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
