//! The five one-parameter families of curves and the rational functions
//! relating their j-invariants.

use num_traits::Zero;

use super::Curve;
use crate::case::CaseLabel;
use crate::error::{Error, Result};
use crate::exactmath::{int, Poly, Rational, UniPoly};

/// Polynomial in t from ascending integer coefficients.
fn tp(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

/// A rational function num(t) / den(t).
#[derive(Debug, Clone, PartialEq)]
pub struct RatFn {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero());
        RatFn { num, den }
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    /// self(inner(t)), homogenized so that no division is needed.
    pub fn compose(&self, inner: &RatFn) -> RatFn {
        let m = self.num.deg().max(self.den.deg());
        let homog = |p: &UniPoly| {
            let mut acc = UniPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = &inner.num.pow(i as u32) * &inner.den.pow((m - i) as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RatFn::new(homog(&self.num), homog(&self.den))
    }

    /// Equality as rational functions.
    pub fn same_as(&self, o: &RatFn) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

#[allow(non_snake_case)]
pub fn F1() -> RatFn {
    // 27 (t+1)(t+9)^3 / t^3
    RatFn::new((&tp(&[1, 1]) * &tp(&[9, 1]).pow(3)).scale(&int(27)), tp(&[0, 0, 0, 1]))
}

#[allow(non_snake_case)]
pub fn F2() -> RatFn {
    RatFn::new(tp(&[0, 3, 3, 1]), tp(&[1]))
}

#[allow(non_snake_case)]
pub fn G1() -> RatFn {
    RatFn::new(tp(&[0, 0, 0, 1]), tp(&[1]))
}

#[allow(non_snake_case)]
pub fn G2() -> RatFn {
    RatFn::new((&tp(&[1, 1]) * &tp(&[-3, 1])).scale(&int(3)), tp(&[0, 1]))
}

#[allow(non_snake_case)]
pub fn G3() -> RatFn {
    RatFn::new(tp(&[3, 3, 1]), tp(&[0, 1]))
}

/// j of the family as a function of its parameter.
pub fn family_j(case: CaseLabel) -> RatFn {
    match case {
        CaseLabel::S4 => RatFn::new(tp(&[0, 1]), tp(&[1])),
        CaseLabel::S3 => F1(),
        CaseLabel::D4 => G1(),
        CaseLabel::C2xC2 => G1().compose(&G2()),
        CaseLabel::C2 => F1().compose(&F2()),
    }
}

/// (A(t), B(t)) of the model y^2 = x^3 + A(t) x + B(t).
pub fn family_ab(case: CaseLabel) -> (UniPoly, UniPoly) {
    let m3 = int(-3);
    let m2 = int(-2);
    match case {
        CaseLabel::S4 => {
            let u = tp(&[-1728, 1]);
            (
                (&tp(&[0, 1]) * &u).scale(&m3),
                (&tp(&[0, 1]) * &u.pow(2)).scale(&m2),
            )
        }
        CaseLabel::S3 => (
            (&tp(&[1, 1]) * &tp(&[9, 1])).scale(&m3),
            (&tp(&[1, 1]) * &tp(&[-27, -18, 1])).scale(&m2),
        ),
        CaseLabel::D4 => {
            let u = tp(&[-1728, 0, 0, 1]);
            ((&tp(&[0, 1]) * &u).scale(&m3), u.pow(2).scale(&m2))
        }
        CaseLabel::C2xC2 => {
            let p = tp(&[-3, -6, 1]);
            (
                (&(&tp(&[-3, 1]) * &tp(&[1, 1])) * &p).scale(&m3),
                (&tp(&[3, 0, 1]) * &p.pow(2)).scale(&m2),
            )
        }
        CaseLabel::C2 => (
            (&(&tp(&[1, 1]) * &tp(&[3, 1])) * &tp(&[3, 0, 1])).scale(&m3),
            (&tp(&[-3, 0, 1]) * &tp(&[9, 18, 18, 6, 1])).scale(&m2),
        ),
    }
}

/// The curve of the family at parameter t. Rejects t = 0 (the parameter
/// ranges over Q*) and values giving a singular model.
pub fn family(case: CaseLabel, t: &Rational) -> Result<Curve> {
    if t.is_zero() {
        return Err(Error::DegenerateParameter(format!("t = 0 for family {case}")));
    }
    let (a, b) = family_ab(case);
    Curve::new(a.eval(t), b.eval(t))
        .map_err(|_| Error::DegenerateParameter(format!("t = {t} gives a singular {case} model")))
}

/// Polynomial in x with coefficients in Q[t], from ascending t-polynomials.
fn xpoly(c: Vec<UniPoly>) -> Poly<UniPoly> {
    Poly::new(c)
}

/// The closed-form factorization of psi3 for each family: an overall
/// constant and factors in Q[t][x]. For C2xC2 the first quadratic carries
/// the constant -3(t+1)^2 P, which is what 3x^4 + 6Ax^2 + 12Bx - A^2
/// expands to.
pub fn psi3_factored(case: CaseLabel) -> (Rational, Vec<Poly<UniPoly>>) {
    let one = tp(&[1]);
    let z = UniPoly::zero();
    let factors = match case {
        CaseLabel::S4 => {
            let u = tp(&[-1728, 1]);
            let tu = &tp(&[0, 1]) * &u;
            vec![xpoly(vec![
                (&tu * &tu).scale(&int(-3)),
                (&tu * &u).scale(&int(-8)),
                tu.scale(&int(-6)),
                z.clone(),
                one,
            ])]
        }
        CaseLabel::S3 => {
            let s = tp(&[1, 1]);
            vec![
                xpoly(vec![tp(&[-3, -3]), one.clone()]),
                xpoly(vec![
                    &s * &tp(&[9, 1]).pow(2),
                    (&s * &tp(&[-15, 1])).scale(&int(3)),
                    s.scale(&int(3)),
                    one,
                ]),
            ]
        }
        CaseLabel::D4 => {
            let u = tp(&[-1728, 0, 0, 1]);
            let t = tp(&[0, 1]);
            vec![xpoly(vec![
                (&(&t * &t) * &u.pow(2)).scale(&int(-3)),
                u.pow(2).scale(&int(-8)),
                (&t * &u).scale(&int(-6)),
                z.clone(),
                one,
            ])]
        }
        CaseLabel::C2xC2 => {
            let p = tp(&[-3, -6, 1]);
            vec![
                xpoly(vec![
                    (&tp(&[1, 1]).pow(2) * &p).scale(&int(-3)),
                    p.scale(&int(-2)),
                    one.clone(),
                ]),
                xpoly(vec![&tp(&[-3, 1]).pow(2) * &p, p.scale(&int(2)), one]),
            ]
        }
        CaseLabel::C2 => vec![
            xpoly(vec![tp(&[-3, -6, -3]), one.clone()]),
            xpoly(vec![tp(&[9, 6, 1]), one.clone()]),
            xpoly(vec![tp(&[9, 0, 6, 0, 1]), tp(&[-6, 0, 2]), one]),
        ],
    };
    (int(3), factors)
}

/// The first C2xC2 quadratic with the opposite constant +(t+1)^2 P. It does
/// not divide psi3; kept for the test below.
pub fn c2xc2_alt_first_factor() -> Poly<UniPoly> {
    let p = tp(&[-3, -6, 1]);
    xpoly(vec![&tp(&[1, 1]).pow(2) * &p, p.scale(&int(-2)), tp(&[1])])
}

/// psi3 of the family as an element of Q[t][x].
pub fn psi3_symbolic(case: CaseLabel) -> Poly<UniPoly> {
    let (a, b) = family_ab(case);
    xpoly(vec![
        -(&a * &a),
        b.scale(&int(12)),
        a.scale(&int(6)),
        UniPoly::zero(),
        tp(&[3]),
    ])
}

/// Substitutes t into a polynomial of Q[t][x].
pub fn specialize(p: &Poly<UniPoly>, t: &Rational) -> UniPoly {
    UniPoly::new(p.coeffs().iter().map(|c| c.eval(t)).collect())
}

/// j(family) equals family_j as rational functions in t.
pub fn family_j_identity(case: CaseLabel) -> bool {
    let (a, b) = family_ab(case);
    let a3 = a.pow(3);
    let j = RatFn::new(a3.scale(&int(6912)), &a3.scale(&int(4)) + &b.pow(2).scale(&int(27)));
    j.same_as(&family_j(case))
}

/// psi3(family) equals the closed-form product in Q[t][x].
pub fn psi3_identity(case: CaseLabel) -> bool {
    let (c, factors) = psi3_factored(case);
    let prod = factors.iter().fold(Poly::<UniPoly>::one(), |acc, f| &acc * f);
    prod.map(|p| p.scale(&c)) == psi3_symbolic(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{j_invariant, psi3};
    use crate::exactmath::frac;

    #[test]
    fn composition_identity() {
        assert!(F1().compose(&F2()).same_as(&G1().compose(&G2()).compose(&G3())));
        assert!(!F1().compose(&F2()).same_as(&G1().compose(&G2())));
    }

    #[test]
    fn symbolic_identities() {
        for case in CaseLabel::ALL {
            assert!(family_j_identity(case), "{case}");
            assert!(psi3_identity(case), "{case}");
        }
    }

    #[test]
    fn alt_c2xc2_factor_does_not_divide() {
        let (_, mut factors) = psi3_factored(CaseLabel::C2xC2);
        factors[0] = c2xc2_alt_first_factor();
        let prod = &factors[0] * &factors[1];
        assert_ne!(prod.map(|p| p.scale(&int(3))), psi3_symbolic(CaseLabel::C2xC2));
    }

    #[test]
    fn specializations() {
        for case in CaseLabel::ALL {
            for t in [int(2), frac(-5, 7), int(11)] {
                let e = family(case, &t).unwrap();
                assert_eq!(j_invariant(&e).unwrap(), family_j(case).eval(&t).unwrap());
                assert_eq!(psi3(&e), specialize(&psi3_symbolic(case), &t));
            }
        }
        assert!(matches!(family(CaseLabel::S3, &int(-1)), Err(Error::DegenerateParameter(_))));
        assert!(matches!(family(CaseLabel::C2, &int(0)), Err(Error::DegenerateParameter(_))));
        // S4 example from the closed form at t = 2
        let e = family(CaseLabel::S4, &int(2)).unwrap();
        let want = UniPoly::from_ints(&[-12 * 1726 * 1726, -16 * 1726 * 1726, 12 * 1726, 0, 1]);
        assert_eq!(psi3(&e), want.scale(&int(3)));
    }
}
