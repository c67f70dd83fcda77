//! Ideals of the Laurent ring `F_p[x_1^±, ..., x_D^±]`.
//!
//! A Laurent ideal is handled through its polynomial model: each generator is
//! cleared of denominators by a monomial (a unit), an auxiliary variable `t`
//! is adjoined together with `t*x_1*...*x_D - 1`, and a Gröbner basis is
//! taken in `F_p[x_1, ..., x_D, t]` (grevlex, `t` last). The Laurent ideal is
//! the unit ideal exactly when that basis contains a nonzero constant.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::groebner::{self, Poly};
use crate::laurent::matrix::LaurentMatrix;
use crate::laurent::poly::{var_name, LaurentPoly};

pub const MONOMIAL_ORDER: &str = "grevlex, auxiliary localisation variable t last";

#[derive(Clone, Debug)]
pub struct IdealDescription {
    p: u32,
    nvars: usize,
    generators: Vec<LaurentPoly>,
    groebner: Option<Vec<Poly>>,
}

/// Serializable view of an ideal for certificates.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdealSummary {
    pub generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub monomial_order: String,
    pub is_unit: bool,
}

fn cleared_poly(f: &LaurentPoly, with_aux: bool) -> Poly {
    let (_, terms) = f.cleared();
    let n = f.nvars() + usize::from(with_aux);
    Poly::from_terms(
        f.prime(),
        n,
        terms.into_iter().map(|(mut e, c)| {
            if with_aux {
                e.push(0);
            }
            (e, c)
        }),
    )
}

/// `t * x_1 * ... * x_D - 1` in `F_p[x_1..x_D, t]`.
fn localisation_relation(p: u32, nvars: usize) -> Poly {
    Poly::from_terms(p, nvars + 1, [(vec![1; nvars + 1], 1), (vec![0; nvars + 1], p - 1)])
}

impl IdealDescription {
    pub fn new(p: u32, nvars: usize, generators: Vec<LaurentPoly>) -> Result<Self> {
        for g in &generators {
            if g.prime() != p || g.nvars() != nvars {
                return Err(Error::IncompatibleRing(format!(
                    "generator over F_{}[{} vars] in an ideal of F_{p}[{nvars} vars]",
                    g.prime(),
                    g.nvars()
                )));
            }
        }
        Ok(IdealDescription { p, nvars, generators, groebner: None })
    }

    pub fn unit(p: u32, nvars: usize) -> Self {
        IdealDescription { p, nvars, generators: vec![LaurentPoly::one(p, nvars)], groebner: None }
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(LaurentPoly::is_zero)
    }

    fn model_generators(&self) -> Vec<Poly> {
        let mut gens: Vec<Poly> =
            self.generators.iter().filter(|g| !g.is_zero()).map(|g| cleared_poly(g, true)).collect();
        gens.push(localisation_relation(self.p, self.nvars));
        gens
    }

    /// Gröbner basis of the polynomial model, computed once and cached.
    pub fn groebner_basis(&mut self) -> &[Poly] {
        if self.groebner.is_none() {
            let gb = if self.is_zero() { Vec::new() } else { groebner::groebner_basis(&self.model_generators()) };
            self.groebner = Some(gb);
        }
        self.groebner.as_deref().unwrap()
    }

    pub fn is_unit(&mut self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.groebner_basis().iter().any(Poly::is_nonzero_constant)
    }

    /// Laurent ideal membership.
    pub fn contains(&mut self, f: &LaurentPoly) -> Result<bool> {
        if f.prime() != self.p || f.nvars() != self.nvars {
            return Err(Error::IncompatibleRing("membership test across rings".into()));
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let gb = self.groebner_basis().to_vec();
        Ok(groebner::normal_form(&cleared_poly(f, true), &gb).is_zero())
    }

    fn model_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (0..self.nvars).map(|i| var_name(i, self.nvars)).collect();
        names.push("t".into());
        names
    }

    pub fn summary(&mut self) -> IdealSummary {
        let is_unit = self.is_unit();
        let names = self.model_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let gb = self.groebner_basis().iter().map(|g| g.to_string_with(&refs)).collect();
        IdealSummary {
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            groebner_basis: gb,
            monomial_order: MONOMIAL_ORDER.into(),
            is_unit,
        }
    }
}

/// Whether the Laurent ideal generated by `gens` is `(1)`. The empty list and
/// lists of zeros generate the zero ideal.
pub fn ideal_is_unit(gens: &[LaurentPoly]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(false);
    };
    let mut ideal = IdealDescription::new(first.prime(), first.nvars(), gens.to_vec())?;
    Ok(ideal.is_unit())
}

pub fn ideal_contains(gens: &[LaurentPoly], f: &LaurentPoly) -> Result<bool> {
    let mut ideal = IdealDescription::new(f.prime(), f.nvars(), gens.to_vec())?;
    ideal.contains(f)
}

/// Exact division in the Laurent ring: `Some(q)` with `g = q * f` when it
/// exists.
pub fn divides(f: &LaurentPoly, g: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    f.check_ring(g)?;
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if g.is_zero() {
        return Ok(Some(LaurentPoly::zero(f.prime(), f.nvars())));
    }
    let (p, n) = (f.prime(), f.nvars());
    let (shift_f, _) = f.cleared();
    let (shift_g, _) = g.cleared();
    let (q, r) = groebner::divide(&cleared_poly(g, false), &cleared_poly(f, false));
    if !r.is_zero() {
        return Ok(None);
    }
    // g = x^{sg} G, f = x^{sf} F, G = Q F  =>  g = Q x^{sg - sf} f
    let shift: Vec<i32> = shift_g.iter().zip(&shift_f).map(|(a, b)| a - b).collect();
    let quotient = LaurentPoly::from_terms(
        p,
        n,
        q.terms().iter().map(|(m, c)| (m.0.iter().zip(&shift).map(|(e, s)| *e as i32 + s).collect(), *c as i64)),
    );
    Ok(Some(quotient))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All nonzero `k x k` minors of `m`, in a fixed order.
pub fn nonzero_minors(m: &LaurentMatrix, k: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = Vec::new();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let d = m.minor(&rows, &cols)?;
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DeterminantalProfile {
    /// Largest `k` with a nonzero `k x k` minor.
    pub rank: usize,
    /// `I_rank`, generated by the nonzero minors of that size.
    pub ideal: IdealDescription,
    pub is_unit: bool,
}

/// Smallest nonzero determinantal ideal of `m` and whether it is `(1)`.
/// `I_0 = (1)` by convention, so the zero matrix reports rank 0 and a unit
/// ideal.
pub fn determinantal_profile(m: &LaurentMatrix) -> Result<DeterminantalProfile> {
    let (p, n) = (m.prime(), m.nvars());
    let mut rank = 0;
    let mut gens = vec![LaurentPoly::one(p, n)];
    for k in 1..=m.rows().min(m.cols()) {
        let minors = nonzero_minors(m, k)?;
        if minors.is_empty() {
            break;
        }
        rank = k;
        gens = minors;
    }
    let mut ideal = IdealDescription::new(p, n, gens)?;
    let is_unit = ideal.is_unit();
    Ok(DeterminantalProfile { rank, ideal, is_unit })
}
