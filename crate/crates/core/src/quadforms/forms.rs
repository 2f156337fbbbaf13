//! Binary quadratic forms, representation of 1, points on conics and the
//! involution between a conic and the quartic curve Q'^2 + Q = 0.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::hilbert::hilbert_global;
use crate::error::{Error, Result};
use crate::exactmath::{is_square, squarefree_part, Rational, UniPoly};
use crate::json;

/// Q(x, y) = a*x^2 + b*y^2 + c*x*y.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinaryForm {
    #[serde(serialize_with = "json::rational")]
    pub a: Rational,
    #[serde(serialize_with = "json::rational")]
    pub b: Rational,
    #[serde(serialize_with = "json::rational")]
    pub c: Rational,
}

pub type Point = (Rational, Rational);

impl BinaryForm {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        BinaryForm { a, b, c }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        &self.a * x * x + &self.b * y * y + &self.c * x * y
    }

    pub fn eval_poly(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        let k = |c: &Rational| UniPoly::constant(c.clone());
        &(&(&k(&self.a) * &(x * x)) + &(&k(&self.b) * &(y * y))) + &(&k(&self.c) * &(x * y))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// 4ab - c^2.
    pub fn disc(&self) -> Rational {
        Rational::from_integer(4.into()) * &self.a * &self.b - &self.c * &self.c
    }

    pub fn scale(&self, k: &Rational) -> Self {
        BinaryForm::new(&self.a * k, &self.b * k, &self.c * k)
    }

    fn swapped(&self) -> Self {
        BinaryForm::new(self.b.clone(), self.a.clone(), self.c.clone())
    }

    /// Gradient at a point.
    pub fn gradient(&self, x: &Rational, y: &Rational) -> Point {
        let two = Rational::from_integer(2.into());
        (&two * &self.a * x + &self.c * y, &self.c * x + &two * &self.b * y)
    }

    /// True when -disc is a nonzero square, i.e. Q splits into two distinct
    /// rational linear forms.
    pub fn is_isotropic(&self) -> bool {
        let nd = -self.disc();
        !nd.is_zero() && is_square(&nd).is_some()
    }
}

impl std::fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})*x^2 + ({})*y^2 + ({})*x*y", self.a, self.b, self.c)
    }
}

/// Whether Q(x, y) = 1 has a rational solution.
pub fn represents_one(q: &BinaryForm, factor_budget: u64) -> Result<bool> {
    if q.b.is_zero() && q.a.is_zero() {
        return Ok(!q.c.is_zero());
    }
    if q.b.is_zero() {
        return represents_one(&q.swapped(), factor_budget);
    }
    let nd = -q.disc();
    if nd.is_zero() {
        // b * (y + c x / 2b)^2
        return Ok(is_square(&q.b).is_some());
    }
    Ok(hilbert_global(&nd, &q.b, factor_budget)?.value == 1)
}

/// A rational point with Q(x, y) = target, `None` if there is none.
pub fn conic_point(
    q: &BinaryForm,
    target: &Rational,
    factor_budget: u64,
    height_budget: u64,
) -> Result<Option<Point>> {
    if target.is_zero() {
        return Err(Error::InvalidInput("conic target must be nonzero".into()));
    }
    if q.is_zero() {
        return Ok(None);
    }
    if q.a.is_zero() && q.b.is_zero() {
        return Ok(Some((Rational::one(), target / &q.c)));
    }
    if q.b.is_zero() {
        return Ok(conic_point(&q.swapped(), target, factor_budget, height_budget)?
            .map(|(x, y)| (y, x)));
    }
    let nd = -q.disc();
    let two_b = &q.b * Rational::from_integer(2.into());
    if nd.is_zero() {
        // b Y^2 = target with Y = y + c x / 2b; take x = 0
        return Ok(is_square(&(target / &q.b)).map(|y| (Rational::zero(), y)));
    }
    if let Some(s) = is_square(&nd) {
        // q = b (y - r1 x)(y - r2 x); solve y - r1 x = 1, y - r2 x = target / b
        let r1 = (-&q.c + &s) / &two_b;
        let r2 = (-&q.c - &s) / &two_b;
        let u = Rational::one();
        let v = target / &q.b;
        let x = (&u - &v) / (&r2 - &r1);
        let y = &u + &r1 * &x;
        return Ok(Some((x, y)));
    }
    // b Y^2 + k x^2 = target, with Y = y + c x / (2b), k = disc / 4b
    let k = q.disc() / (&two_b * Rational::from_integer(2.into()));
    let alpha = &q.b / target;
    let beta = &k / target;
    let sa = squarefree_part(&alpha, factor_budget)?;
    let sb = squarefree_part(&beta, factor_budget)?;
    if hilbert_global(&sa.to_rational(), &sb.to_rational(), factor_budget)?.value != 1 {
        return Ok(None);
    }
    let ra = is_square(&(&alpha / sa.to_rational())).expect("square by construction");
    let rb = is_square(&(&beta / sb.to_rational())).expect("square by construction");
    let (w, xx, z) = legendre_search(sa.value(), sb.value(), height_budget)?;
    let z = Rational::from_integer(z);
    let yy = Rational::from_integer(w) / (&ra * &z);
    let x = Rational::from_integer(xx) / (&rb * &z);
    let y = yy - &q.c * &x / &two_b;
    debug_assert_eq!(q.eval(&x, &y), *target);
    Ok(Some((x, y)))
}

/// Finds coprime (w, x) and z > 0 with sa w^2 + sb x^2 = z^2, by increasing
/// height. Holzer's bound guarantees a solution with |w| <= sqrt|sb| and
/// |x| <= sqrt|sa| once the global symbol is +1.
fn legendre_search(sa: &BigInt, sb: &BigInt, height_budget: u64) -> Result<(BigInt, BigInt, BigInt)> {
    let bw = sb.magnitude().sqrt().to_u64().unwrap_or(u64::MAX).saturating_add(1);
    let bx = sa.magnitude().sqrt().to_u64().unwrap_or(u64::MAX).saturating_add(1);
    let limit = bw.max(bx).min(height_budget);
    let small = |v: &BigInt| v.abs() < BigInt::from(1i64 << 40);
    let fast = small(sa) && small(sb) && limit < (1 << 20);
    let (fa, fb) = (sa.to_i128().unwrap_or(0), sb.to_i128().unwrap_or(0));
    let check = |w: u64, x: u64| -> Option<(BigInt, BigInt, BigInt)> {
        if num_integer::gcd(w, x) != 1 {
            return None;
        }
        if fast {
            let v = fa * (w as i128) * (w as i128) + fb * (x as i128) * (x as i128);
            if v <= 0 {
                return None;
            }
            let r = (v as u128).sqrt();
            (r * r == v as u128).then(|| (w.into(), x.into(), BigInt::from(r)))
        } else {
            let v = sa * BigInt::from(w).pow(2) + sb * BigInt::from(x).pow(2);
            if !v.is_positive() {
                return None;
            }
            let r = v.sqrt();
            (&r * &r == v).then(|| (w.into(), x.into(), r))
        }
    };
    for h in 1..=limit {
        for i in 0..=h {
            if i <= bx && h <= bw {
                if let Some(s) = check(h, i) {
                    return Ok(s);
                }
            }
            if i < h && h <= bx && i <= bw {
                if let Some(s) = check(i, h) {
                    return Ok(s);
                }
            }
        }
    }
    Err(Error::SearchBudgetExceeded(limit))
}

/// The rational map r -> base - 2 target (r tau + base) / Q(r tau + base),
/// with tau orthogonal to the gradient at `base`. Every rational point other
/// than the base is reached; r = infinity gives the base and r = 0 gives
/// -base.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicParam {
    pub form: BinaryForm,
    pub target: Rational,
    pub base: Point,
    pub x_num: UniPoly,
    pub y_num: UniPoly,
    pub den: UniPoly,
}

impl ConicParam {
    pub fn eval(&self, r: &Rational) -> Option<Point> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return None;
        }
        Some((self.x_num.eval(r) / &d, self.y_num.eval(r) / d))
    }

    /// Checks Q(x_num, y_num) = target * den^2 as polynomials.
    pub fn verify(&self) -> bool {
        self.form.eval_poly(&self.x_num, &self.y_num)
            == self.den.pow(2).scale(&self.target)
    }

    /// The r with eval(r) = p, or `None` when p is the base (r = infinity)
    /// or off the conic.
    pub fn parameter_of(&self, p: &Point) -> Option<Rational> {
        if self.form.eval(&p.0, &p.1) != self.target {
            return None;
        }
        let (dx, dy) = (&p.0 - &self.base.0, &p.1 - &self.base.1);
        let (nx, ny) = self.form.gradient(&self.base.0, &self.base.1);
        let (tx, ty) = (-ny, nx);
        let k = &dx * &ty - &dy * &tx;
        if k.is_zero() {
            return None;
        }
        let r = (&dy * &self.base.0 - &dx * &self.base.1) / k;
        (self.eval(&r).as_ref() == Some(p)).then_some(r)
    }

    /// Value at r = infinity.
    pub fn at_infinity(&self) -> Point {
        let deg = self.den.deg();
        if deg == 0 {
            return self.base.clone();
        }
        let l = self.den.coeff(deg);
        (self.x_num.coeff(deg) / &l, self.y_num.coeff(deg) / l)
    }
}

pub fn conic_parametrize(q: &BinaryForm, target: &Rational, base: &Point) -> Result<ConicParam> {
    if q.eval(&base.0, &base.1) != *target || target.is_zero() {
        return Err(Error::InvalidInput("base point is not on the conic".into()));
    }
    let (nx, ny) = q.gradient(&base.0, &base.1);
    let tau = (-ny, nx);
    // Q(r tau + base) = Q(tau) r^2 + target, the cross term vanishes
    let den = UniPoly::new(vec![target.clone(), Rational::zero(), q.eval(&tau.0, &tau.1)]);
    let two_t = target * Rational::from_integer(2.into());
    let line = |t: &Rational, b: &Rational| UniPoly::new(vec![b.clone(), t.clone()]);
    let x_num = &den.scale(&base.0) - &line(&tau.0, &base.0).scale(&two_t);
    let y_num = &den.scale(&base.1) - &line(&tau.1, &base.1).scale(&two_t);
    Ok(ConicParam { form: q.clone(), target: target.clone(), base: base.clone(), x_num, y_num, den })
}

/// (x, y) -> (x / Q'(x, y), y / Q'(x, y)). Exchanges the points of
/// Q'^2 + Q = 0 and of Q = -1; `p` must lie on one of the two curves.
pub fn involution_c(qp: &BinaryForm, q: &BinaryForm, p: &Point) -> Result<Point> {
    let nd = -qp.disc();
    if nd.is_zero() || is_square(&nd).is_some() {
        return Err(Error::AnisotropyViolated);
    }
    let v = qp.eval(&p.0, &p.1);
    if v.is_zero() {
        return Err(Error::AnisotropyViolated);
    }
    let qv = q.eval(&p.0, &p.1);
    if qv != -Rational::one() && &v * &v + &qv != Rational::zero() {
        return Err(Error::InvalidInput("point lies on neither Q = -1 nor Q'^2 + Q = 0".into()));
    }
    Ok((&p.0 / &v, &p.1 / &v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, int};

    const FB: u64 = 1_000_000;

    fn form(a: i64, b: i64, c: i64) -> BinaryForm {
        BinaryForm::new(int(a), int(b), int(c))
    }

    #[test]
    fn represents() {
        assert!(represents_one(&form(1, 1, 0), FB).unwrap());
        assert!(!represents_one(&form(-1, -1, 0), FB).unwrap());
        assert!(represents_one(&form(0, 0, 5), FB).unwrap());
        assert!(!represents_one(&form(3, 0, 0), FB).unwrap());
        assert!(represents_one(&form(0, 4, 0), FB).unwrap());
        // 1728 (224 n^2 - 32 n m - 10 m^2)
        let q = form(224, -10, -32).scale(&int(1728));
        assert_eq!(-q.disc(), int(1728 * 1728) * int(9984));
        assert!(represents_one(&q, FB).unwrap());
    }

    #[test]
    fn points() {
        let q = form(1, -3, 0);
        let p = conic_point(&q, &int(1), FB, 10_000).unwrap().unwrap();
        assert_eq!(q.eval(&p.0, &p.1), int(1));
        let q = form(1, 2, 0);
        assert_eq!(conic_point(&q, &int(12), FB, 10_000).unwrap(), Some((int(2), int(2))));
        assert_eq!(conic_point(&form(-1, -1, 0), &int(1), FB, 10_000).unwrap(), None);
        // isotropic and degenerate forms
        let q = form(1, -1, 0);
        let p = conic_point(&q, &frac(7, 3), FB, 10).unwrap().unwrap();
        assert_eq!(q.eval(&p.0, &p.1), frac(7, 3));
        let q = form(0, 0, 2);
        let p = conic_point(&q, &int(5), FB, 10).unwrap().unwrap();
        assert_eq!(q.eval(&p.0, &p.1), int(5));
        let q = form(1, 0, 0);
        assert_eq!(conic_point(&q, &int(2), FB, 10).unwrap(), None);
        let q = BinaryForm::new(int(3), frac(1, 7), int(-5));
        let p = conic_point(&q, &frac(-13, 7), FB, 10_000).unwrap().unwrap();
        assert_eq!(q.eval(&p.0, &p.1), frac(-13, 7));
    }

    #[test]
    fn budget() {
        // 97 x^2 + 89 y^2 = z^2 needs height above 3
        let q = form(1, -97, 0);
        let r = conic_point(&q, &int(89), FB, 2);
        if hilbert_global(&int(97 * 89), &int(89), FB).unwrap().value == 1 {
            assert!(matches!(r, Err(Error::SearchBudgetExceeded(_)) | Ok(Some(_))));
        }
    }

    #[test]
    fn parametrization() {
        for (q, t, base) in [
            (form(1, -3, 0), int(1), (int(2), int(1))),
            (form(1, 2, 0), int(12), (int(2), int(2))),
            (BinaryForm::new(int(3), frac(1, 7), int(-5)), int(3), (int(1), int(0))),
        ] {
            let m = conic_parametrize(&q, &t, &base).unwrap();
            assert!(m.verify());
            assert_eq!(m.at_infinity(), base);
            for r in -4..5 {
                if let Some(p) = m.eval(&int(r)) {
                    assert_eq!(q.eval(&p.0, &p.1), t);
                }
            }
        }
    }

    #[test]
    fn involution_roundtrip() {
        let qp = form(1, 1, 0);
        // Q = -x^2 - y^2 + ..., take Q = -2x^2 - y^2: point (0, 1) on Q = -1
        let q = form(-2, -1, 0);
        let p = (int(0), int(1));
        let img = involution_c(&qp, &q, &p).unwrap();
        let v = qp.eval(&img.0, &img.1);
        assert_eq!(&v * &v + q.eval(&img.0, &img.1), int(0));
        assert_eq!(involution_c(&qp, &q, &img).unwrap(), p);
        assert_eq!(involution_c(&qp, &q, &(int(0), int(0))), Err(Error::AnisotropyViolated));
        assert_eq!(involution_c(&form(1, -1, 0), &q, &p), Err(Error::AnisotropyViolated));
    }
}
