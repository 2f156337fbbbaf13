//! Rational scalars and exact root extraction.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Canonical arbitrary-precision rational (reduced, positive denominator).
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn exact_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        if k % 2 == 0 {
            return None;
        }
        return exact_nth_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root, if one exists (the non-negative one).
pub fn is_square(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = exact_nth_root(x.numer(), 2)?;
    let d = exact_nth_root(x.denom(), 2)?;
    Some(Rational::new(n, d))
}

/// Exact rational cube root, if one exists.
pub fn is_cube(x: &Rational) -> Option<Rational> {
    let n = exact_nth_root(x.numer(), 3)?;
    let d = exact_nth_root(x.denom(), 3)?;
    Some(Rational::new(n, d))
}

/// True when `x / y` is a nonzero rational square, i.e. both lie in the same
/// class of Q*/Q*^2. No factoring needed.
pub fn same_square_class(x: &Rational, y: &Rational) -> bool {
    if x.is_zero() || y.is_zero() {
        return false;
    }
    is_square(&(x / y)).is_some()
}

/// Height of a rational: max(|num|, den).
pub fn height(x: &Rational) -> BigInt {
    let n = x.numer().abs();
    if n > *x.denom() {
        n
    } else {
        x.denom().clone()
    }
}

/// `(-1)^k` as a rational.
pub fn sign_power(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Deterministic enumeration of Q by increasing height:
/// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, 3/2, ...
#[derive(Debug, Clone)]
pub struct RationalsByHeight {
    height: i64,
    queue: std::collections::VecDeque<Rational>,
    started: bool,
}

impl RationalsByHeight {
    pub fn new() -> Self {
        RationalsByHeight { height: 0, queue: Default::default(), started: false }
    }
}

impl Default for RationalsByHeight {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RationalsByHeight {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        if !self.started {
            self.started = true;
            return Some(Rational::zero());
        }
        while self.queue.is_empty() {
            self.height += 1;
            let h = self.height;
            // numerator h over smaller denominators, then smaller numerators over h
            let mut fresh = Vec::new();
            for d in 1..=h {
                if num_integer::gcd(h, d) == 1 {
                    fresh.push(frac(h, d));
                }
            }
            for n in 1..h {
                if num_integer::gcd(n, h) == 1 {
                    fresh.push(frac(n, h));
                }
            }
            for r in fresh {
                self.queue.push_back(r.clone());
                self.queue.push_back(-r);
            }
        }
        self.queue.pop_front()
    }
}
