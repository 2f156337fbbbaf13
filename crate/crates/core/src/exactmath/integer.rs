//! Integer factorization and square classes of Q*/Q*^2.
//!
//! Trial division by every prime below 10^6, then Miller-Rabin and Brent's
//! variant of Pollard rho with a fixed seed sequence, so results and budget
//! consumption are reproducible.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i as u32).collect()
    })
}

/// Primes up to `bound` (bound at most 10^6).
pub fn primes_up_to(bound: u32) -> impl Iterator<Item = u32> {
    small_primes().iter().copied().take_while(move |&p| p <= bound)
}

/// Miller-Rabin with the first 13 prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle-finding Pollard rho. Consumes iterations from `budget`.
fn pollard_brent(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let m: u64 = 128;
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = m.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                if *budget < steps {
                    *budget = 0;
                    return None;
                }
                *budget -= steps;
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        if *budget == 0 {
            return None;
        }
    }
    None
}

fn factor_large(n: BigUint, budget: &mut u64, out: &mut Vec<(BigUint, u32)>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        out.push((n, 1));
        return Ok(());
    }
    let r = n.sqrt();
    if &r * &r == n {
        let mut sub = Vec::new();
        factor_large(r, budget, &mut sub)?;
        out.extend(sub.into_iter().map(|(p, e)| (p, 2 * e)));
        return Ok(());
    }
    let d = pollard_brent(&n, budget).ok_or_else(|| Error::FactorBudgetExceeded(n.to_string()))?;
    let other = &n / &d;
    factor_large(d, budget, out)?;
    factor_large(other, budget, out)
}

/// Prime factorization of a positive integer, sorted by prime.
pub fn factor(n: &BigUint, budget: u64) -> Result<Vec<(BigUint, u32)>> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            out.push((rest.clone(), 1));
            rest = BigUint::one();
            break;
        }
        let mut e = 0;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
    }
    let mut remaining = budget;
    let mut big = Vec::new();
    factor_large(rest, &mut remaining, &mut big)?;
    out.extend(big);
    out.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in out {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(merged)
}

/// A squarefree nonzero integer standing for a class of Q*/Q*^2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeClass(pub BigInt);

impl SquarefreeClass {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.0.clone())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn of_i64(v: i64) -> Self {
        SquarefreeClass(BigInt::from(v))
    }
}

impl serde::Serialize for SquarefreeClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl std::fmt::Display for SquarefreeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The unique squarefree integer `s` with `x = s * (rational square)`.
pub fn squarefree_part(x: &Rational, budget: u64) -> Result<SquarefreeClass> {
    if x.is_zero() {
        return Err(Error::InvalidInput("squarefree part of 0".into()));
    }
    let mut s = BigInt::one();
    for part in [x.numer(), x.denom()] {
        let mag = part.magnitude();
        if mag.is_one() {
            continue;
        }
        for (p, e) in factor(mag, budget)? {
            if e % 2 == 1 {
                s *= BigInt::from(p);
            }
        }
    }
    if x.numer().sign() == Sign::Minus {
        s = -s;
    }
    Ok(SquarefreeClass(s))
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut v = 0;
    let mut m = n.clone();
    while !m.is_zero() && (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}

/// Legendre symbol (a/p) for an odd prime p: 0, 1 or -1.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Converts small integers; used where the prime is known to be tiny.
pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}
