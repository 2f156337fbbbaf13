//! Dense univariate polynomials, coefficients stored degree-ascending.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomials over Q.
pub type UniPoly = Poly<Rational>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::power(self, e)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lb = b.lc();
        let Some(da) = self.degree() else { return r };
        if da < db {
            return r;
        }
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = Self::monomial(r.lc(), dr - db);
            r = &r.scale(&lb) - &(&t * b);
            e -= 1;
        }
        r.scale(&lb.power(e as u32))
    }

    /// Exact quotient in R[x], `None` if `b` does not divide `self`.
    pub fn exact_quotient(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().exact_div(&b.lc())?;
            q[dr - db] = c.clone();
            r = &r - &(&Self::monomial(c, dr - db) * b);
        }
        Some(Self::new(q))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_quotient(other)
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect())
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).minus(&o.coeff(i))).collect())
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Poly::new(v)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|c| c.negate()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                (&self).$m(&o)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: &Poly<R>) -> Poly<R> {
                (&self).$m(o)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

// ---- field-specific operations over Q ----

impl UniPoly {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| Rational::from_integer(n.into())).collect())
    }

    /// Builds from degree-descending coefficients.
    pub fn from_descending(c: &[Rational]) -> Self {
        Self::new(c.iter().rev().cloned().collect())
    }

    pub fn descending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let inv = Rational::one() / b.lc();
        let mut r = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lc() * &inv;
            q[dr - db] = c.clone();
            r = &r - &(&Self::monomial(c, dr - db) * b);
        }
        (Self::new(q), r)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Rational::one() / self.lc();
        self.scale(&inv)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, b: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors (up to a constant),
    /// returned monic.
    pub fn radical(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// `self(x + c)`
    pub fn shift(&self, c: &Rational) -> Self {
        self.compose(&Self::new(vec![c.clone(), Rational::one()]))
    }

    /// Removes the x^(n-1) term of a polynomial of degree n by `x -> x - c`.
    /// Returns the depressed polynomial and the shift `c`.
    pub fn depress(&self) -> (Self, Rational) {
        let n = self.deg();
        if n < 1 {
            return (self.clone(), Rational::zero());
        }
        let c = self.coeff(n - 1) / (self.lc() * Rational::from_integer(BigInt::from(n)));
        (self.shift(&-c.clone()), c)
    }

    /// Pretty form in the variable `var`, parsable by the CLI grammar.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, int};

    #[test]
    fn arithmetic_and_display() {
        let f = UniPoly::from_ints(&[-12, 0, 2, 0, 1]);
        assert_eq!(f.to_string(), "x^4 + 2*x^2 - 12");
        let g = UniPoly::new(vec![frac(-13, 4), int(-6), int(0), int(1)]);
        assert_eq!(g.to_string(), "x^3 - 6*x - 13/4");
        let p = &UniPoly::from_ints(&[2, 0, 1]) * &UniPoly::from_ints(&[-6, 0, 1]);
        assert_eq!(p, UniPoly::from_ints(&[-12, 0, -4, 0, 1]));
        assert_eq!(p.eval(&int(2)), int(-12));
    }

    #[test]
    fn division_gcd_radical() {
        let f = UniPoly::from_ints(&[0, 0, 3, 0, 1]); // x^2 (x^2 + 3)
        assert_eq!(f.radical(), UniPoly::from_ints(&[0, 3, 0, 1]));
        let (q, r) = f.div_rem(&UniPoly::from_ints(&[3, 0, 1]));
        assert_eq!((q, r), (UniPoly::from_ints(&[0, 0, 1]), UniPoly::zero()));
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn pseudo_remainder_matches_field_remainder() {
        let a = UniPoly::from_ints(&[1, 2, 3, 4, 5]);
        let b = UniPoly::from_ints(&[7, 0, 3]);
        let pr = a.pseudo_rem(&b);
        let r = a.div_rem(&b).1;
        assert_eq!(pr, r.scale(&int(27)));
    }

    #[test]
    fn depress_quartic() {
        let f = UniPoly::from_ints(&[1, 2, 3, 8, 2]);
        let (d, _) = f.depress();
        assert!(d.coeff(3).is_zero());
        assert_eq!(d.lc(), int(2));
    }

    #[test]
    fn primitive_integer_form() {
        let f = UniPoly::new(vec![frac(-1, 2), frac(1, 3)]);
        assert_eq!(f.primitive_integer(), vec![BigInt::from(-3), BigInt::from(2)]);
    }
}
