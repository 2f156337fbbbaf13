//! Oracles that share no code with the library: factorization patterns of
//! polynomials mod p and brute-force local solvability of conics.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use torsion3::exactmath::UniPoly;
use torsion3::quartic::CaseLabel;

pub fn primes(bound: u64) -> Vec<u64> {
    let mut sieve = vec![true; bound as usize + 1];
    let mut out = Vec::new();
    for n in 2..=bound as usize {
        if sieve[n] {
            out.push(n as u64);
            let mut k = n * n;
            while k <= bound as usize {
                sieve[k] = false;
                k += n;
            }
        }
    }
    out
}

// polynomials over F_p, ascending, no trailing zeros

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let li = inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        for i in 0..=dm {
            let k = top - dm + i;
            r[k] = (r[k] + p - c * m[i] % p) % p;
        }
        r = trim(r);
    }
    r
}

fn quot(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let li = inv(m[dm], p);
    let mut q = vec![0; a.len().saturating_sub(dm)];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        q[top - dm] = c;
        for i in 0..=dm {
            let k = top - dm + i;
            r[k] = (r[k] + p - c * m[i] % p) % p;
        }
        r = trim(r);
    }
    trim(q)
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    rem(&trim(c), m, p)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let c = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(c)
}

/// h^p mod m.
fn frobenius(h: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1];
    let mut base = h.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of a squarefree f mod p, sorted.
pub fn degree_pattern_mod(f: &[u64], p: u64) -> Vec<usize> {
    let mut g = trim(f.to_vec());
    let mut out = Vec::new();
    let x = vec![0, 1];
    let mut h = rem(&x, &g, p);
    let mut d = 1;
    while g.len() > 2 * d {
        h = frobenius(&h, &g, p);
        let c = gcd(&g, &sub(&h, &x, p), p);
        let k = c.len() - 1;
        if k > 0 {
            out.extend(std::iter::repeat_n(d, k / d));
            g = quot(&g, &c, p);
            h = rem(&h, &g, p);
        }
        d += 1;
    }
    if g.len() > 1 {
        out.push(g.len() - 1);
    }
    out.sort();
    out
}

/// Cycle type of a Frobenius element, fixed points dropped.
pub type Cycles = Vec<usize>;

/// Cycle-type distribution of each case's Galois group acting on the roots
/// of the radical.
pub fn expected(case: CaseLabel) -> BTreeMap<Cycles, f64> {
    let v: &[(&[usize], f64)] = match case {
        CaseLabel::C2 => &[(&[], 0.5), (&[2], 0.5)],
        CaseLabel::C2xC2 => &[(&[], 0.25), (&[2], 0.5), (&[2, 2], 0.25)],
        CaseLabel::S3 => &[(&[], 1.0 / 6.0), (&[2], 0.5), (&[3], 1.0 / 3.0)],
        CaseLabel::D4 => &[(&[], 0.125), (&[2], 0.25), (&[2, 2], 0.375), (&[4], 0.25)],
        CaseLabel::S4 => &[(&[], 1.0 / 24.0), (&[2], 0.25), (&[2, 2], 0.125), (&[3], 1.0 / 3.0), (&[4], 0.25)],
    };
    v.iter().map(|(k, p)| (k.to_vec(), *p)).collect()
}

/// Observed cycle types of f's radical over the first `count` good primes.
pub fn frobenius_counts(f: &UniPoly, count: usize) -> BTreeMap<Cycles, usize> {
    let rad = f.radical();
    let ints = rad.primitive_integer();
    let lc = ints.last().unwrap().clone();
    let disc = torsion3::exactmath::discriminant(&rad);
    let bad = |p: u64| {
        let pb = BigInt::from(p);
        (&lc % &pb).is_zero() || (disc.numer() % &pb).is_zero() || (disc.denom() % &pb).is_zero()
    };
    let mut out = BTreeMap::new();
    let mut used = 0;
    for p in primes(100_000).into_iter().skip(1) {
        if used == count {
            break;
        }
        if bad(p) {
            continue;
        }
        let pb = BigInt::from(p);
        let red: Vec<u64> = ints.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        let cyc: Cycles = degree_pattern_mod(&red, p).into_iter().filter(|d| *d > 1).collect();
        *out.entry(cyc).or_insert(0) += 1;
        used += 1;
    }
    out
}

/// The case whose distribution gives the observed counts the highest
/// likelihood, among those whose support contains every observation.
pub fn frobenius_oracle(f: &UniPoly, primes: usize) -> CaseLabel {
    let counts = frobenius_counts(f, primes);
    CaseLabel::ALL
        .into_iter()
        .filter_map(|case| {
            let dist = expected(case);
            let mut ll = 0.0;
            for (cyc, n) in &counts {
                ll += *n as f64 * dist.get(cyc)?.ln();
            }
            Some((case, ll))
        })
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .expect("some case fits")
        .0
}

/// (a, b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
/// modulo p^2 (p odd) or 2^6. Valid for squarefree a, b.
pub fn hilbert_brute(a: i64, b: i64, p: i64) -> i32 {
    let m = if p == 2 { 64 } else { p * p };
    let mut square = vec![false; m as usize];
    let mut unit_square = vec![false; m as usize];
    for z in 0..m {
        let s = (z * z % m) as usize;
        square[s] = true;
        if z % p != 0 {
            unit_square[s] = true;
        }
    }
    let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
    for x in 0..m {
        for y in 0..m {
            let v = ((a * x % m * x + b * y % m * y) % m) as usize;
            let hit = if x % p != 0 || y % p != 0 { square[v] } else { unit_square[v] };
            if hit {
                return 1;
            }
        }
    }
    -1
}

pub fn is_squarefree_int(n: i64) -> bool {
    let n = n.abs();
    n != 0 && (2..=n).take_while(|k| k * k <= n).all(|k| n % (k * k) != 0)
}

/// Prime divisors of a nonzero integer, by trial division.
pub fn prime_divisors(n: &BigInt) -> Vec<i64> {
    let mut n = n.abs().to_i64().expect("small");
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
