//! Local and global Hilbert symbols over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exactmath::integer::{factor, legendre, valuation};
use crate::exactmath::Rational;

/// A place of Q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: i64) -> Self {
        Place::Prime(BigInt::from(p))
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Writes x = p^v * u with u a p-adic unit; returns (v, numerator and
/// denominator of u).
fn split(x: &Rational, p: &BigInt) -> (i64, BigInt, BigInt) {
    let vn = valuation(x.numer(), p);
    let vd = valuation(x.denom(), p);
    let n = x.numer() / p.pow(vn);
    let d = x.denom() / p.pow(vd);
    (vn as i64 - vd as i64, n, d)
}

fn parity(v: i64) -> i64 {
    v.rem_euclid(2)
}

/// The local Hilbert symbol (a, b)_v.
pub fn hilbert_local(a: &Rational, b: &Rational, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigInt::from(2) => {
            let (alpha, un, ud) = split(a, p);
            let (beta, vn, vd) = split(b, p);
            // for odd d, d^-1 = d mod 8
            let eight = BigInt::from(8);
            let u = (un * ud).mod_floor(&eight).to_i64().unwrap();
            let v = (vn * vd).mod_floor(&eight).to_i64().unwrap();
            let eps = |x: i64| ((x - 1) / 2) % 2;
            let omega = |x: i64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(v) + parity(alpha) * omega(v) + parity(beta) * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, un, ud) = split(a, p);
            let (beta, vn, vd) = split(b, p);
            let eps_p = ((p - 1u32) / 2u32).is_odd();
            let mut s = if eps_p && parity(alpha) * parity(beta) == 1 { -1 } else { 1 };
            if parity(beta) == 1 {
                s *= legendre(&(un * ud), p);
            }
            if parity(alpha) == 1 {
                s *= legendre(&(vn * vd), p);
            }
            s
        }
    }
}

/// The places where (a, b) can be nontrivial: infinity, 2, and the primes
/// dividing a numerator or denominator.
pub fn relevant_places(a: &Rational, b: &Rational, budget: u64) -> Result<Vec<Place>> {
    let mut primes: Vec<BigInt> = vec![BigInt::from(2)];
    for x in [a.numer(), a.denom(), b.numer(), b.denom()] {
        let m = x.magnitude();
        if m.is_one() {
            continue;
        }
        for (p, _) in factor(m, budget)? {
            primes.push(BigInt::from(p));
        }
    }
    primes.sort();
    primes.dedup();
    let mut places = vec![Place::Infinity];
    places.extend(primes.into_iter().map(Place::Prime));
    Ok(places)
}

/// Global symbol with its local components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlobalSymbol {
    pub value: i32,
    pub entries: Vec<(Place, i32)>,
}

impl GlobalSymbol {
    pub fn failing_places(&self) -> Vec<&Place> {
        self.entries.iter().filter(|(_, s)| *s == -1).map(|(p, _)| p).collect()
    }
}

/// +1 iff z^2 = a x^2 + b y^2 has a nontrivial rational solution.
pub fn hilbert_global(a: &Rational, b: &Rational, budget: u64) -> Result<GlobalSymbol> {
    let entries: Vec<(Place, i32)> = relevant_places(a, b, budget)?
        .into_iter()
        .map(|v| {
            let s = hilbert_local(a, b, &v);
            (v, s)
        })
        .collect();
    let value = if entries.iter().any(|(_, s)| *s == -1) { -1 } else { 1 };
    Ok(GlobalSymbol { value, entries })
}
