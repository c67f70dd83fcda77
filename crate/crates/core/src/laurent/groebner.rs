//! Buchberger's algorithm over `F_p[x_1, ..., x_k]` in graded reverse
//! lexicographic order. Instances here have two to four variables, so the
//! plain pair loop with the coprime and chain criteria is enough.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::field;

/// Exponent vector with grevlex ordering (the last variable is the
/// smallest).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|v| *v == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with terms sorted by decreasing monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    p: u32,
    nvars: usize,
    terms: Vec<(Monomial, u32)>,
}

impl Poly {
    pub fn zero(p: u32, nvars: usize) -> Self {
        Poly { p, nvars, terms: Vec::new() }
    }

    pub fn one(p: u32, nvars: usize) -> Self {
        Poly { p, nvars, terms: vec![(Monomial(vec![0; nvars]), 1)] }
    }

    pub fn from_terms(p: u32, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, u32)>) -> Self {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), nvars);
            let v = acc.entry(Monomial(e)).or_insert(0);
            *v = field::add(*v, c % p, p);
        }
        Self::from_map(p, nvars, acc)
    }

    fn from_map(p: u32, nvars: usize, acc: BTreeMap<Monomial, u32>) -> Self {
        Poly { p, nvars, terms: acc.into_iter().rev().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            let s = field::inv(*c, self.p);
            for t in &mut self.terms {
                t.1 = field::mul(t.1, s, self.p);
            }
        }
        self
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field::signed(*c, self.p);
            if k == 0 {
                if s < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if s < 0 { " - " } else { " + " });
            }
            let mut f = Vec::new();
            if s.unsigned_abs() != 1 || m.is_one() {
                f.push(s.unsigned_abs().to_string());
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => f.push(names[i].to_string()),
                    _ => f.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&f.join("*"));
        }
        out
    }
}

fn into_map(f: &Poly) -> BTreeMap<Monomial, u32> {
    f.terms.iter().cloned().collect()
}

/// `work -= factor * shift * g` (ignoring g's leading term when `skip_lead`).
fn sub_multiple(work: &mut BTreeMap<Monomial, u32>, g: &Poly, factor: u32, shift: &Monomial, skip_lead: bool, p: u32) {
    for (gm, gc) in g.terms.iter().skip(usize::from(skip_lead)) {
        let m = gm.mul(shift);
        let d = field::mul(factor, *gc, p);
        let v = work.entry(m.clone()).or_insert(0);
        *v = field::sub(*v, d, p);
        if *v == 0 {
            work.remove(&m);
        }
    }
}

/// Fully reduced normal form of `f` modulo `basis` (basis elements monic).
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    let p = f.p;
    let mut work = into_map(f);
    let mut rem = BTreeMap::new();
    while let Some((m, c)) = work.pop_last() {
        match basis.iter().find(|g| g.leading().is_some_and(|(lm, _)| lm.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let factor = field::mul(c, field::inv(*lc, p), p);
                sub_multiple(&mut work, g, factor, &m.div(lm), true, p);
            }
            None => {
                rem.insert(m, c);
            }
        }
    }
    Poly::from_map(p, f.nvars, rem)
}

/// Division of `f` by a single nonzero `g`: returns `(quotient, remainder)`.
pub fn divide(f: &Poly, g: &Poly) -> (Poly, Poly) {
    let p = f.p;
    let (lm, lc) = g.leading().expect("division by zero polynomial").clone();
    let lc_inv = field::inv(lc, p);
    let mut work = into_map(f);
    let mut quot = BTreeMap::new();
    let mut rem = BTreeMap::new();
    while let Some((m, c)) = work.pop_last() {
        if lm.divides(&m) {
            let factor = field::mul(c, lc_inv, p);
            let shift = m.div(&lm);
            sub_multiple(&mut work, g, factor, &shift, true, p);
            quot.insert(shift, factor);
        } else {
            rem.insert(m, c);
        }
    }
    (Poly::from_map(p, f.nvars, quot), Poly::from_map(p, f.nvars, rem))
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let p = f.p;
    let (fm, _) = f.leading().unwrap();
    let (gm, _) = g.leading().unwrap();
    let l = fm.lcm(gm);
    // both monic: S = (l/fm) f - (l/gm) g
    let mut work = BTreeMap::new();
    sub_multiple(&mut work, f, p - 1, &l.div(fm), true, p);
    sub_multiple(&mut work, g, 1, &l.div(gm), true, p);
    Poly::from_map(p, f.nvars, work)
}

/// Reduced Gröbner basis of the ideal generated by `gens`. If the ideal is
/// the unit ideal the result is `[1]`.
pub fn groebner_basis(gens: &[Poly]) -> Vec<Poly> {
    let mut g: Vec<Poly> = gens.iter().filter(|f| !f.is_zero()).cloned().map(Poly::monic).collect();
    if g.is_empty() {
        return g;
    }
    let (p, nvars) = (g[0].p, g[0].nvars);
    if g.iter().any(Poly::is_nonzero_constant) {
        return vec![Poly::one(p, nvars)];
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let lm = |g: &[Poly], i: usize| g[i].leading().unwrap().0.clone();
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| lm(&g, a.0).lcm(&lm(&g, a.1)).cmp(&lm(&g, b.0).lcm(&lm(&g, b.1))).then(a.cmp(b)))
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (lm(&g, i), lm(&g, j));
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..g.len()).any(|k| {
            k != i && k != j && lm(&g, k).divides(&l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let r = r.monic();
            if r.is_nonzero_constant() {
                return vec![Poly::one(p, nvars)];
            }
            let k = g.len();
            g.push(r);
            for i in 0..k {
                pending.insert((i, k));
            }
        }
    }
    reduce_basis(g)
}

fn reduce_basis(mut g: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Poly> = Vec::new();
    g.sort_by(|a, b| a.leading().unwrap().0.cmp(&b.leading().unwrap().0));
    for f in g {
        let m = &f.leading().unwrap().0;
        if !keep.iter().any(|h| h.leading().unwrap().0.divides(m)) {
            keep.push(f);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| f.clone()).collect();
        let (lm, _) = keep[i].leading().unwrap().clone();
        let tail = Poly { p: keep[i].p, nvars: keep[i].nvars, terms: keep[i].terms[1..].to_vec() };
        let mut reduced = normal_form(&tail, &others);
        reduced.terms.insert(0, (lm, 1));
        out.push(reduced);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, n: usize, t: &[(&[u32], u32)]) -> Poly {
        Poly::from_terms(p, n, t.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn grevlex_order() {
        // x > y > z in degree one; x*z < y^2 in grevlex
        assert!(Monomial(vec![1, 0, 0]) > Monomial(vec![0, 1, 0]));
        assert!(Monomial(vec![0, 2, 0]) > Monomial(vec![1, 0, 1]));
        assert!(Monomial(vec![0, 0, 2]) > Monomial(vec![1, 0, 0]));
    }

    #[test]
    fn coprime_linear_forms_generate_maximal_ideal() {
        // (x - 1, y - 1) over F_3 is already a reduced basis
        let f = poly(3, 2, &[(&[1, 0], 1), (&[0, 0], 2)]);
        let g = poly(3, 2, &[(&[0, 1], 1), (&[0, 0], 2)]);
        let gb = groebner_basis(&[f.clone(), g.clone()]);
        assert_eq!(gb.len(), 2);
        assert!(normal_form(&f, &gb).is_zero());
    }

    #[test]
    fn unit_ideal_detected() {
        // x*y - 1 and x over F_2 generate (1)
        let f = poly(2, 2, &[(&[1, 1], 1), (&[0, 0], 1)]);
        let g = poly(2, 2, &[(&[1, 0], 1)]);
        let gb = groebner_basis(&[f, g]);
        assert_eq!(gb.len(), 1);
        assert!(gb[0].is_nonzero_constant());
    }

    #[test]
    fn division_exact() {
        let f = poly(5, 2, &[(&[1, 1], 1), (&[0, 0], 4)]);
        let q = poly(5, 2, &[(&[2, 0], 3), (&[0, 1], 1)]);
        let prod = {
            let mut t = Vec::new();
            for (a, ca) in f.terms() {
                for (b, cb) in q.terms() {
                    t.push((a.mul(b).0, field::mul(*ca, *cb, 5)));
                }
            }
            Poly::from_terms(5, 2, t)
        };
        let (qq, r) = divide(&prod, &f);
        assert!(r.is_zero());
        assert_eq!(qq, q);
    }
}
