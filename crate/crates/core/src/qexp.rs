//! Truncated Laurent series in u = q^(1/3) and the check j = t^3 for the
//! Hauptmodul t of the level-3 modular curve built from
//! h = (1/3) eta(tau/3)^3 / eta(3 tau)^3.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{frac, int, Rational};
use crate::json;

/// sum_{i} coeffs[i] u^(val + i), known exactly for exponents below
/// val + coeffs.len(). A nonempty coefficient list starts with a nonzero
/// entry; the zero series keeps only its precision in `val`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LaurentSeries {
    pub val: i64,
    #[serde(serialize_with = "json::rationals")]
    pub coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// Normalizes leading zeros away.
    pub fn new(val: i64, mut coeffs: Vec<Rational>) -> Self {
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        LaurentSeries { val: val + lead as i64, coeffs }
    }

    /// Exact polynomial part, truncated at exponent `prec`.
    pub fn from_terms(terms: &[(i64, Rational)], prec: i64) -> Self {
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap_or(prec).min(prec);
        let mut c = vec![Rational::zero(); (prec - lo).max(0) as usize];
        for (e, v) in terms {
            if *e < prec {
                c[(*e - lo) as usize] += v;
            }
        }
        Self::new(lo, c)
    }

    pub fn one(prec: i64) -> Self {
        Self::from_terms(&[(0, Rational::one())], prec)
    }

    /// First exponent not known.
    pub fn prec(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Coefficient of u^k; `None` beyond the precision.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        if k >= self.prec() {
            None
        } else if k < self.val {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(k - self.val) as usize].clone())
        }
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let keep = (prec - self.val).clamp(0, self.coeffs.len() as i64) as usize;
        if keep == 0 {
            return LaurentSeries { val: prec.min(self.prec()), coeffs: vec![] };
        }
        Self::new(self.val, self.coeffs[..keep].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentSeries { val: self.prec(), coeffs: vec![] };
        }
        LaurentSeries { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add_const(&self, c: &Rational) -> Self {
        self + &Self::from_terms(&[(0, c.clone())], self.prec())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivideByZeroSeries);
        }
        let n = self.coeffs.len();
        let a0 = &self.coeffs[0];
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(a0.recip());
        for k in 1..n {
            let mut s = Rational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b.push(-s / a0);
        }
        Ok(LaurentSeries { val: -self.val, coeffs: b })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    /// Relative precision is that of the base; e = 0 gives 1 with it.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let mut c = vec![Rational::zero(); self.coeffs.len().max(1)];
            c[0] = Rational::one();
            return LaurentSeries { val: 0, coeffs: c };
        }
        let mut out = self.clone();
        for _ in 1..e {
            out = &out * self;
        }
        out
    }

    /// f(u) -> f(u^k).
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut c = vec![Rational::zero(); self.coeffs.len() * k];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * k] = x.clone();
        }
        LaurentSeries { val: self.val * k as i64, coeffs: c }
    }

    /// Whether every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, o: &LaurentSeries) -> LaurentSeries {
        let prec = self.prec().min(o.prec());
        let lo = self.val.min(o.val).min(prec);
        let mut c = vec![Rational::zero(); (prec - lo) as usize];
        for s in [self, o] {
            for (i, x) in s.coeffs.iter().enumerate() {
                let e = s.val + i as i64;
                if e < prec {
                    c[(e - lo) as usize] += x;
                }
            }
        }
        LaurentSeries::new(lo, c)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        LaurentSeries { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, o: &LaurentSeries) -> LaurentSeries {
        self + &-o
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, o: &LaurentSeries) -> LaurentSeries {
        let val = self.val + o.val;
        if self.is_zero() || o.is_zero() {
            let prec = (self.prec() + o.valuation().unwrap_or(o.val))
                .min(o.prec() + self.valuation().unwrap_or(self.val));
            return LaurentSeries { val: prec, coeffs: vec![] };
        }
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut c = vec![Rational::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                c[i + j] += &self.coeffs[i] * &o.coeffs[j];
            }
        }
        LaurentSeries::new(val, c)
    }
}

/// prod_{n >= 1} (1 - x^n) truncated below x^prec.
pub fn euler_product(prec: i64) -> LaurentSeries {
    let prec = prec.max(1);
    let mut c = vec![Rational::zero(); prec as usize];
    c[0] = Rational::one();
    for n in 1..prec as usize {
        for k in (n..prec as usize).rev() {
            let sub = c[k - n].clone();
            c[k] -= sub;
        }
    }
    LaurentSeries::new(0, c)
}

/// h = (1/3) u^-1 prod (1 - u^n)^3 / prod (1 - u^9n)^3, known below u^n.
pub fn eta_quotient_h(n: i64) -> LaurentSeries {
    let p = euler_product(n + 1);
    let p9 = euler_product((n + 1) / 9 + 1).substitute_power(9).truncate(n + 1);
    let num = p.pow(3);
    let den = p9.pow(3);
    let q = num.div(&den).expect("constant term 1");
    LaurentSeries { val: q.val - 1, coeffs: q.coeffs }.scale(&frac(1, 3))
}

/// t = 3 (h + 1)(h + 3)(h^2 + 3) / (h (h^2 + 3h + 3)).
pub fn hauptmodul_t(h: &LaurentSeries) -> Result<LaurentSeries> {
    let h2 = h * h;
    let num = &(&h.add_const(&int(1)) * &h.add_const(&int(3))) * &h2.add_const(&int(3));
    let den = h * &(&h2 + &h.scale(&int(3))).add_const(&int(3));
    Ok(num.div(&den)?.scale(&int(3)))
}

fn sigma3(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

/// j = E4^3 / Delta in u = q^(1/3), known below u^n.
pub fn j_series(n: i64) -> LaurentSeries {
    // q-precision so that 3 * prec_q >= n
    let m = (n + 3).div_euclid(3) + 1;
    let mut e4 = vec![Rational::one()];
    for k in 1..m + 1 {
        e4.push(int(240) * int(sigma3(k as u64) as i64));
    }
    let e4 = LaurentSeries::new(0, e4);
    let delta = {
        let p = euler_product(m + 1).pow(24);
        LaurentSeries { val: 1, coeffs: p.coeffs }
    };
    let j = e4.pow(3).div(&delta).expect("leading coefficient 1");
    j.substitute_power(3).truncate(n)
}

/// t^3 - j vanishes for the first `terms` coefficients, starting at u^-3.
pub fn check_identity(terms: usize) -> bool {
    let top = terms as i64 - 3;
    // t has valuation -1, so h must be known two orders beyond t^3
    let h = eta_quotient_h(top + 2);
    check_identity_with(&h, terms)
}

/// The identity for a given h series; used to test sensitivity.
pub fn check_identity_with(h: &LaurentSeries, terms: usize) -> bool {
    let top = terms as i64 - 3;
    let Ok(t) = hauptmodul_t(h) else { return false };
    let t3 = t.pow(3);
    let j = j_series(top);
    if t3.prec() < top || j.prec() < top {
        return false;
    }
    (-3..top).all(|k| t3.coeff(k) == j.coeff(k))
}
