use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field;

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i32>;

/// Sparse Laurent polynomial over `F_p` in `nvars` variables.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration,
/// equality, hashing and printing are deterministic. No stored coefficient
/// is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    p: u32,
    nvars: usize,
    terms: BTreeMap<Exponent, u32>,
}

impl LaurentPoly {
    pub fn zero(p: u32, nvars: usize) -> Self {
        LaurentPoly { p, nvars, terms: BTreeMap::new() }
    }

    pub fn one(p: u32, nvars: usize) -> Self {
        Self::constant(p, nvars, 1)
    }

    pub fn constant(p: u32, nvars: usize, c: i64) -> Self {
        Self::monomial(p, vec![0; nvars], c)
    }

    pub fn monomial(p: u32, exp: Exponent, c: i64) -> Self {
        let nvars = exp.len();
        let mut out = Self::zero(p, nvars);
        let c = field::reduce(c, p);
        if c != 0 {
            out.terms.insert(exp, c);
        }
        out
    }

    /// The variable `x_i` (0-based).
    pub fn var(p: u32, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(p, e, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(p: u32, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        let mut out = Self::zero(p, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal nvars");
            out.add_term(e, field::reduce(c, p));
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = field::add(*v, c, p);
                if *v == 0 {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.nvars]) == Some(&1)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, u32)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn coeff(&self, e: &[i32]) -> u32 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// `Some((exponent, coefficient))` when this is a single nonzero term,
    /// i.e. a unit of the Laurent ring.
    pub fn as_monomial(&self) -> Option<(&Exponent, u32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (e, *c))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.p == other.p && self.nvars == other.nvars
    }

    pub fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing(format!(
                "F_{}[{} vars] vs F_{}[{} vars]",
                self.p, self.nvars, other.p, other.nvars
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), field::neg(*c, self.p));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let p = self.p;
        let mut out = Self::zero(p, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, field::mul(*ca, *cb, p));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        if c == 0 {
            return Self::zero(self.p, self.nvars);
        }
        let p = self.p;
        LaurentPoly {
            p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), field::mul(*v, c, p))).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &[i32]) -> Self {
        LaurentPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), *c)).collect(),
        }
    }

    /// The involution `x_i -> x_i^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|v| -v).collect(), *c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.p, self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Largest `|e_i|` over all terms; zero for the zero polynomial.
    pub fn max_abs_exponent(&self) -> u32 {
        self.terms.keys().flat_map(|e| e.iter().map(|v| v.unsigned_abs())).max().unwrap_or(0)
    }

    /// Splits `self = x^shift * P` with `P` a polynomial (nonnegative
    /// exponents) not divisible by any variable. Returns `(shift, P-terms)`.
    pub fn cleared(&self) -> (Exponent, Vec<(Vec<u32>, u32)>) {
        if self.is_zero() {
            return (vec![0; self.nvars], Vec::new());
        }
        let mut shift = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (s, v) in shift.iter_mut().zip(e) {
                *s = (*s).min(*v);
            }
        }
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(&shift).map(|(v, s)| (v - s) as u32).collect(), *c)).collect();
        (shift, terms)
    }

    /// Embeds into a ring with more variables (new variables appended).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        LaurentPoly {
            p: self.p,
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, *c)
                })
                .collect(),
        }
    }

    /// Parses the text syntax `2*x^-1*y^3 - y + 1`. Variables are `x, y, z`
    /// (when `nvars <= 3`) or `x1 .. xD` (1-based).
    pub fn parse(text: &str, p: u32, nvars: usize) -> Result<Self> {
        Parser { src: text.as_bytes(), pos: 0, p, nvars }.parse()
    }
}

pub(crate) fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let s = field::signed(*c, self.p);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if mag != 1 || e.iter().all(|v| *v == 0) {
                factors.push(mag.to_string());
            }
            for (i, v) in e.iter().enumerate() {
                match v {
                    0 => {}
                    1 => factors.push(var_name(i, self.nvars)),
                    _ => factors.push(format!("{}^{}", var_name(i, self.nvars), v)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    p: u32,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.p, self.nvars);
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = 1i64;
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                None if !first => break,
                _ if first => {}
                _ => return self.err("expected '+' or '-'"),
            }
            first = false;
            self.skip_ws();
            let (e, c) = self.term()?;
            out.add_term(e, field::reduce(sign * c, self.p));
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Exponent, i64)> {
        let mut exp = vec![0i32; self.nvars];
        let mut coeff = 1i64;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.integer()?;
                    coeff = (coeff * field::reduce(v, self.p) as i64).rem_euclid(self.p as i64);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, power) = self.factor()?;
                    exp[var] += power;
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((exp, coeff))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<i64>().map_err(|_| Error::Parse { pos: start, msg: format!("integer out of range: {s}") })
    }

    fn factor(&mut self) -> Result<(usize, i32)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let var = match name {
            "x" | "y" | "z" if self.nvars <= 3 => {
                let i = (name.as_bytes()[0] - b'x') as usize;
                if i >= self.nvars {
                    self.pos = start;
                    return self.err(format!("variable {name} not in a ring with {} variables", self.nvars));
                }
                i
            }
            _ => match name.strip_prefix('x').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 && k <= self.nvars => k - 1,
                _ => {
                    self.pos = start;
                    return self.err(format!("unknown variable '{name}'"));
                }
            },
        };
        self.skip_ws();
        let mut power = 1i32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let close = match self.peek() {
                Some(b'(') => Some(b')'),
                Some(b'{') => Some(b'}'),
                _ => None,
            };
            if close.is_some() {
                self.pos += 1;
                self.skip_ws();
            }
            let mut sign = 1i64;
            match self.peek() {
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(b'+') => self.pos += 1,
                _ => {}
            }
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return self.err("expected an exponent");
            }
            let v = sign * self.integer()?;
            power = i32::try_from(v).or_else(|_| self.err("exponent out of range"))?;
            if let Some(c) = close {
                self.skip_ws();
                if self.peek() != Some(c) {
                    return self.err(format!("expected '{}'", c as char));
                }
                self.pos += 1;
            }
        }
        Ok((var, power))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(self.p - 1)
    }
}
