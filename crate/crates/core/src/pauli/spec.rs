use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field;
use crate::laurent::{LaurentMatrix, LaurentPoly};

/// `λ_q = (0 id_q; -id_q 0)` over `F_p[x_1^±..x_D^±]`.
pub fn symplectic_form(p: u32, nvars: usize, q: usize) -> LaurentMatrix {
    let mut m = LaurentMatrix::zeros(p, nvars, 2 * q, 2 * q);
    for i in 0..q {
        m[(i, q + i)] = LaurentPoly::one(p, nvars);
        m[(q + i, i)] = LaurentPoly::constant(p, nvars, -1);
    }
    m
}

/// A translation-invariant Pauli subalgebra given by generator symbols.
///
/// Column `j` of `generators` is the symbol of the `j`-th generator: rows
/// `0..q` hold the X-part and rows `q..2q` the Z-part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpec {
    q: usize,
    generators: LaurentMatrix,
}

impl SubalgebraSpec {
    pub fn new(q: usize, generators: LaurentMatrix) -> Result<Self> {
        field::check_prime(generators.prime())?;
        if q == 0 {
            return Err(Error::InvalidSpec("qudits_per_site must be at least 1".into()));
        }
        if generators.nvars() == 0 {
            return Err(Error::InvalidSpec("dims must be at least 1".into()));
        }
        if generators.rows() != 2 * q {
            return Err(Error::Shape(format!(
                "generator matrix has {} rows, expected 2q = {}",
                generators.rows(),
                2 * q
            )));
        }
        Ok(SubalgebraSpec { q, generators })
    }

    /// The whole local operator algebra: `V = id_{2q}`.
    pub fn full(p: u32, q: usize, dims: usize) -> Result<Self> {
        Self::new(q, LaurentMatrix::identity(p, dims, 2 * q))
    }

    /// The scalars: no generators.
    pub fn empty(p: u32, q: usize, dims: usize) -> Result<Self> {
        Self::new(q, LaurentMatrix::zeros(p, dims, 2 * q, 0))
    }

    pub fn prime(&self) -> u32 {
        self.generators.prime()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dims(&self) -> usize {
        self.generators.nvars()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.cols()
    }

    pub fn generators(&self) -> &LaurentMatrix {
        &self.generators
    }

    pub fn generator(&self, j: usize) -> Vec<LaurentPoly> {
        self.generators.column(j)
    }

    /// Largest exponent magnitude among all generator terms.
    pub fn spread(&self) -> u32 {
        self.generators.max_abs_exponent()
    }

    pub fn lambda(&self) -> LaurentMatrix {
        symplectic_form(self.prime(), self.dims(), self.q)
    }

    /// Complex conjugate in the basis where Z is diagonal: Z-parts negated.
    pub fn conjugate(&self) -> Self {
        let mut v = self.generators.clone();
        for i in self.q..2 * self.q {
            for j in 0..v.cols() {
                v[(i, j)] = -&v[(i, j)];
            }
        }
        SubalgebraSpec { q: self.q, generators: v }
    }

    pub fn to_json_value(&self) -> SpecJson {
        let q = self.q;
        SpecJson {
            prime: self.prime() as u64,
            qudits_per_site: q,
            dims: self.dims(),
            generators: (0..self.num_generators())
                .map(|j| {
                    let col = self.generator(j);
                    GeneratorJson {
                        x: col[..q].iter().map(|f| f.to_string()).collect(),
                        z: col[q..].iter().map(|f| f.to_string()).collect(),
                    }
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SpecJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse { pos: byte_offset(text, e.line(), e.column()), msg: e.to_string() })?;
        raw.into_spec()
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    start + column.saturating_sub(1)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub x: Vec<String>,
    pub z: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub prime: u64,
    pub qudits_per_site: usize,
    pub dims: usize,
    pub generators: Vec<GeneratorJson>,
}

impl SpecJson {
    pub fn into_spec(self) -> Result<SubalgebraSpec> {
        if self.prime > u32::MAX as u64 || !field::is_prime(self.prime) {
            return Err(Error::NotPrime(self.prime));
        }
        let p = self.prime as u32;
        let (q, d) = (self.qudits_per_site, self.dims);
        if q == 0 || d == 0 {
            return Err(Error::InvalidSpec("qudits_per_site and dims must be positive".into()));
        }
        let mut cols = Vec::with_capacity(self.generators.len());
        for (j, g) in self.generators.iter().enumerate() {
            if g.x.len() != q || g.z.len() != q {
                return Err(Error::Shape(format!(
                    "generators[{j}] has {} x-rows and {} z-rows, expected {q} each",
                    g.x.len(),
                    g.z.len()
                )));
            }
            let mut col = Vec::with_capacity(2 * q);
            for (part, polys) in [("x", &g.x), ("z", &g.z)] {
                for (i, text) in polys.iter().enumerate() {
                    let f = LaurentPoly::parse(text, p, d).map_err(|e| match e {
                        Error::Parse { pos, msg } => {
                            Error::Parse { pos, msg: format!("generators[{j}].{part}[{i}] = {text:?}: {msg}") }
                        }
                        other => other,
                    })?;
                    col.push(f);
                }
            }
            cols.push(col);
        }
        SubalgebraSpec::new(q, LaurentMatrix::from_columns(p, d, 2 * q, cols)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_is_antihermitian_and_invertible() {
        let l = symplectic_form(5, 2, 3);
        assert!(l.is_antihermitian());
        let inv = l.inverse().unwrap();
        assert_eq!(&l * &inv, LaurentMatrix::identity(5, 2, 6));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"prime":2,"qudits_per_site":1,"dims":1,"generators":[{"x":["1"],"z":["x"]}]}"#;
        let s = SubalgebraSpec::from_json(text).unwrap();
        assert_eq!(s.num_generators(), 1);
        assert_eq!(s.spread(), 1);
        let again = SubalgebraSpec::from_json(&s.to_json()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn rejects_composite_prime() {
        let text = r#"{"prime":4,"qudits_per_site":1,"dims":1,"generators":[]}"#;
        assert_eq!(SubalgebraSpec::from_json(text), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rejects_wrong_row_count() {
        let text = r#"{"prime":3,"qudits_per_site":2,"dims":1,"generators":[{"x":["1"],"z":["x","0"]}]}"#;
        assert!(matches!(SubalgebraSpec::from_json(text), Err(Error::Shape(_))));
    }

    #[test]
    fn malformed_polynomial_is_positioned() {
        let text = r#"{"prime":3,"qudits_per_site":1,"dims":1,"generators":[{"x":["1 + x^"],"z":["0"]}]}"#;
        match SubalgebraSpec::from_json(text) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 6);
                assert!(msg.contains("generators[0].x[0]"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_json_is_positioned() {
        let text = "{\"prime\":3,\n \"dims\": }";
        assert!(matches!(SubalgebraSpec::from_json(text), Err(Error::Parse { pos, .. }) if pos > 10));
    }
}
