//! Sparse multivariate polynomials over Q, used for symbolic identities and
//! for eliminating a named variable with a resultant.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use super::ring::Ring;

/// Exponent vector with trailing zeros trimmed, so polynomials in different
/// numbers of variables compare and combine without bookkeeping.
type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let e = a[i].checked_sub(*b.get(i).unwrap_or(&0))?;
        out.push(e);
    }
    Some(trim(out))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = MPoly::zero();
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::power(self, e)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes polynomials for each variable (missing entries keep the variable).
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = images.get(i).cloned().unwrap_or_else(|| MPoly::var(i));
                t = &t * &base.pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Leading monomial in lexicographic order on exponent vectors.
    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        // lex order: compare padded exponent vectors from the first variable.
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    /// Views `self` as a polynomial in variable `v` with coefficients in the rest.
    pub fn to_poly_in(&self, v: usize) -> Poly<MPoly> {
        let mut coeffs: Vec<MPoly> = Vec::new();
        for (m, c) in &self.terms {
            let e = *m.get(v).unwrap_or(&0) as usize;
            let mut rest = m.clone();
            if v < rest.len() {
                rest[v] = 0;
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, MPoly::zero());
            }
            coeffs[e].add_term(trim(rest), c.clone());
        }
        Poly::new(coeffs)
    }

    /// Inverse of [`MPoly::to_poly_in`].
    pub fn from_poly_in(p: &Poly<MPoly>, v: usize) -> MPoly {
        let x = MPoly::var(v);
        p.coeffs().iter().enumerate().fold(MPoly::zero(), |acc, (i, c)| &acc + &(c * &x.pow(i as u32)))
    }

    /// Univariate view when only variable `v` occurs.
    pub fn to_unipoly(&self, v: usize) -> Option<Poly<Rational>> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != v && e > 0) {
                return None;
            }
            let e = *m.get(v).unwrap_or(&0) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        Some(Poly::new(coeffs))
    }

    pub fn from_unipoly(p: &Poly<Rational>, v: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut m = vec![0; v + 1];
            m[v] = i as u32;
            out.add_term(trim(m), c.clone());
        }
        out
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::int(1)
    }
}

impl Ring for MPoly {
    fn from_i64(n: i64) -> Self {
        MPoly::int(n)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        let (lm, lc) = o.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((m, c)) = r.leading() {
            let mq = mono_div(m, &lm)?;
            let cq = c / &lc;
            let mut t = MPoly::zero();
            t.add_term(mq, cq);
            q = &q + &t;
            r = &r - &(&t * o);
        }
        Some(q)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(mono_mul(ma, mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly { terms: acc }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        &self + &o
    }
}
impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        &self - &o
    }
}
impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}
impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, e)| format!("v{i}^{e}")).collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
