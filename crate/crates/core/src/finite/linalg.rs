//! Dense exact linear algebra over `F_p`.

use crate::field;

fn axpy(p: u32, row: &mut [u32], factor: u32, pivot: &[u32], from: usize) {
    let (p64, f) = (p as u64, factor as u64);
    for (r, &v) in row[from..].iter_mut().zip(&pivot[from..]) {
        if v != 0 {
            *r = ((*r as u64 + f * v as u64) % p64) as u32;
        }
    }
}

/// Reduced row echelon form, choosing pivot columns in the order given by
/// `order` (all columns in natural order when `None`). Zero rows are dropped
/// and the rows are returned sorted by pivot position in `order`, together
/// with their pivot columns.
pub fn rref(p: u32, mut rows: Vec<Vec<u32>>, ncols: usize, order: Option<&[usize]>) -> (Vec<Vec<u32>>, Vec<usize>) {
    let natural: Vec<usize>;
    let order = match order {
        Some(o) => o,
        None => {
            natural = (0..ncols).collect();
            &natural
        }
    };
    let mut pivots = Vec::new();
    let mut rank = 0;
    for &col in order {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field::inv(rows[rank][col], p);
        if inv != 1 {
            for v in rows[rank].iter_mut() {
                *v = field::mul(*v, inv, p);
            }
        }
        let pivot = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = field::neg(row[col], p);
                axpy(p, row, f, &pivot, 0);
            }
        }
        rows[rank] = pivot;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rank(p: u32, rows: Vec<Vec<u32>>, ncols: usize) -> usize {
    rref(p, rows, ncols, None).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(p: u32, rows: Vec<Vec<u32>>, ncols: usize) -> Vec<Vec<u32>> {
    let (r, pivots) = rref(p, rows, ncols, None);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = field::neg(row[free], p);
        }
        out.push(v);
    }
    out
}

/// One solution of `A x = b` for `A` given by rows, if any.
pub fn solve(p: u32, rows: &[Vec<u32>], b: &[u32], ncols: usize) -> Option<Vec<u32>> {
    let aug: Vec<Vec<u32>> = rows
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut v = r.clone();
            v.push(bi);
            v
        })
        .collect();
    let (r, pivots) = rref(p, aug, ncols + 1, None);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0; ncols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    Some(x)
}

pub fn dot(p: u32, a: &[u32], b: &[u32]) -> u32 {
    let s: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64 % p as u64).sum();
    (s % p as u64) as u32
}

/// A subspace of `F_p^n` held as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct FpSubspace {
    p: u32,
    n: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl PartialEq for FpSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.dim() == other.dim() && self.contains_all(other)
    }
}

impl Eq for FpSubspace {}

impl FpSubspace {
    pub fn zero(p: u32, n: usize) -> Self {
        FpSubspace { p, n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: u32, n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        FpSubspace { p, n, basis, pivots: (0..n).collect() }
    }

    pub fn span(p: u32, n: usize, vectors: Vec<Vec<u32>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == n));
        let (basis, pivots) = rref(p, vectors, n, None);
        FpSubspace { p, n, basis, pivots }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Residue of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut r = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if r[c] != 0 {
                let f = field::neg(r[c], self.p);
                axpy(self.p, &mut r, f, row, 0);
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_all(&self, other: &FpSubspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &FpSubspace) -> FpSubspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        FpSubspace::span(self.p, self.n, vs)
    }

    /// Dot-product annihilator `{w : w·v = 0 for all v}`.
    pub fn annihilator(&self) -> FpSubspace {
        FpSubspace::span(self.p, self.n, nullspace(self.p, self.basis.clone(), self.n))
    }

    pub fn intersect(&self, other: &FpSubspace) -> FpSubspace {
        // v = Σ c_i b_i lies in `other` iff every annihilator row kills it
        let ann = other.annihilator();
        let constraints: Vec<Vec<u32>> =
            ann.basis.iter().map(|a| self.basis.iter().map(|b| dot(self.p, a, b)).collect()).collect();
        let coeffs = if constraints.is_empty() {
            FpSubspace::full(self.p, self.dim()).basis
        } else {
            nullspace(self.p, constraints, self.dim())
        };
        let vs = coeffs.iter().map(|c| self.combine(c)).collect();
        FpSubspace::span(self.p, self.n, vs)
    }

    /// `Σ c_i b_i`.
    pub fn combine(&self, c: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.n];
        for (row, &ci) in self.basis.iter().zip(c) {
            if ci != 0 {
                axpy(self.p, &mut v, ci, row, 0);
            }
        }
        v
    }

    /// Intersection with the coordinate subspace of vectors vanishing off
    /// `keep`: eliminate with the other columns first, then keep the rows
    /// whose pivot falls among the `keep` columns.
    pub fn intersect_coordinates(&self, keep: &[bool]) -> FpSubspace {
        let mut order: Vec<usize> = (0..self.n).filter(|&i| !keep[i]).collect();
        let first_kept = order.len();
        order.extend((0..self.n).filter(|&i| keep[i]));
        let (rows, pivots) = rref(self.p, self.basis.clone(), self.n, Some(&order));
        let position: Vec<usize> = {
            let mut pos = vec![0; self.n];
            for (k, &c) in order.iter().enumerate() {
                pos[c] = k;
            }
            pos
        };
        let vs: Vec<Vec<u32>> =
            rows.into_iter().zip(pivots).filter(|(_, c)| position[*c] >= first_kept).map(|(r, _)| r).collect();
        FpSubspace::span(self.p, self.n, vs)
    }
}
