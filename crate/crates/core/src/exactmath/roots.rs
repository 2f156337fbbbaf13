//! Rational roots and complete factorization over Q for degree at most 4.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::integer::primes_up_to;
use super::poly::UniPoly;
use super::rational::{is_square, Rational};
use super::resultant::discriminant;

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

/// Integer roots of a monic squarefree integer polynomial.
///
/// Roots are found modulo a prime not dividing the discriminant and lifted
/// by Hensel's lemma past twice the Cauchy bound, so no coefficient ever has
/// to be factored.
fn integer_roots_monic(g: &[BigInt]) -> Vec<BigInt> {
    let n = g.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-g[0].clone()];
    }
    let bound: BigInt = g[..n].iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let poly = UniPoly::new(g.iter().map(|c| Rational::from_integer(c.clone())).collect());
    let disc = discriminant(&poly).to_integer();
    debug_assert!(!disc.is_zero());
    let deriv: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let p = primes_up_to(1_000_000)
        .skip(1)
        .map(BigInt::from)
        .find(|p| !(&disc % p).is_zero())
        .expect("some prime below 10^6 does not divide the discriminant");
    let p_small = p.to_u64().unwrap();
    let mut modulus = p.clone();
    let mut roots: Vec<BigInt> = (0..p_small)
        .map(BigInt::from)
        .filter(|x| eval_mod(g, x, &p).is_zero())
        .collect();
    let target = &bound * 2;
    while modulus <= target {
        let next = &modulus * &modulus;
        roots = roots
            .into_iter()
            .map(|r| {
                // Newton step modulo next
                let fr = eval_mod(g, &r, &next);
                let dr = eval_mod(&deriv, &r, &next);
                let inv = mod_inverse(&dr, &next).expect("simple root modulo p");
                (r - fr * inv).mod_floor(&next)
            })
            .collect();
        modulus = next;
    }
    let half = &modulus / 2;
    let mut out: Vec<BigInt> = roots
        .into_iter()
        .map(|r| if r > half { r - &modulus } else { r })
        .filter(|r| {
            g.iter().rev().fold(BigInt::zero(), |acc, c| acc * r + c).is_zero()
        })
        .collect();
    out.sort();
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Distinct rational roots with their multiplicities, sorted ascending.
pub fn rational_roots(f: &UniPoly) -> Vec<(Rational, u32)> {
    if f.deg() == 0 {
        return Vec::new();
    }
    let sq = f.radical();
    let prim = sq.primitive_integer();
    let n = prim.len() - 1;
    let lead = prim[n].clone();
    // g(y) = lead^(n-1) f(y / lead) is monic with integer coefficients
    let mut mono = vec![BigInt::zero(); n + 1];
    for (i, c) in prim.iter().enumerate() {
        mono[i] = if i == n { BigInt::one() } else { c * num_traits::pow(lead.clone(), n - 1 - i) };
    }
    let mut out = Vec::new();
    for y in integer_roots_monic(&mono) {
        let r = Rational::new(y, lead.clone());
        let mut mult = 0;
        let mut rest = f.clone();
        loop {
            let (q, rem) = rest.div_rem(&UniPoly::linear(&r));
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            rest = q;
        }
        out.push((r, mult));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// A factorization `unit * prod(factor^mult)` with monic irreducible factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Factorization {
    #[serde(skip)]
    pub unit: Rational,
    #[serde(skip)]
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (p, e)| &acc * &p.pow(*e))
    }

    /// Degrees of the distinct irreducible factors, ascending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.factors.iter().map(|(p, _)| p.deg()).collect();
        d.sort();
        d
    }

    /// Degrees with multiplicity, ascending.
    pub fn degree_pattern_with_multiplicity(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p.deg(), *e as usize))
            .collect();
        d.sort();
        d
    }
}

/// Splits a monic quartic without rational roots into two monic quadratics
/// when possible.
fn quadratic_split(f: &UniPoly) -> Option<(UniPoly, UniPoly)> {
    let (g, c) = f.depress();
    let (q, r, s) = (g.coeff(2), g.coeff(1), g.coeff(0));
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let build = |u: &Rational, v: &Rational, w: &Rational| {
        let a = UniPoly::new(vec![v.clone(), u.clone(), Rational::one()]);
        let b = UniPoly::new(vec![w.clone(), -u.clone(), Rational::one()]);
        // undo the depression x -> x - c
        (a.shift(&c), b.shift(&c))
    };
    if r.is_zero() {
        // (x^2 + v)(x^2 + w) with v + w = q, vw = s
        let disc = &q * &q - &four * &s;
        if let Some(sq) = is_square(&disc) {
            let v = (&q + &sq) / &two;
            let w = (&q - &sq) / &two;
            return Some(build(&Rational::zero(), &v, &w));
        }
    }
    // U = u^2 solves U^3 + 2q U^2 + (q^2 - 4s) U - r^2 = 0
    let cubic = UniPoly::new(vec![-(&r * &r), &q * &q - &four * &s, &two * &q, Rational::one()]);
    for (uu, _) in rational_roots(&cubic) {
        if uu.is_zero() {
            continue;
        }
        let Some(u) = is_square(&uu) else { continue };
        let sum = &q + &uu;
        let diff = &r / &u;
        let w = (&sum + &diff) / &two;
        let v = (&sum - &diff) / &two;
        let (a, b) = build(&u, &v, &w);
        if &a * &b == *f {
            return Some((a, b));
        }
    }
    None
}

/// Complete factorization over Q of a polynomial of degree 1 to 4.
pub fn factor_small(f: &UniPoly) -> Factorization {
    assert!((1..=4).contains(&f.deg()), "factor_small handles degrees 1..=4");
    let unit = f.lc();
    let mut rest = f.monic();
    let mut factors = Vec::new();
    for (r, m) in rational_roots(&rest) {
        let lin = UniPoly::linear(&r);
        for _ in 0..m {
            rest = rest.div_rem(&lin).0;
        }
        factors.push((lin, m));
    }
    match rest.deg() {
        0 => {}
        2 | 3 => factors.push((rest, 1)),
        4 => match quadratic_split(&rest) {
            Some((a, b)) if a == b => factors.push((a, 2)),
            Some((a, b)) => {
                let (a, b) = if a.descending() <= b.descending() { (a, b) } else { (b, a) };
                factors.push((a, 1));
                factors.push((b, 1));
            }
            None => factors.push((rest, 1)),
        },
        _ => unreachable!("linear factors were stripped"),
    }
    Factorization { unit, factors }
}
