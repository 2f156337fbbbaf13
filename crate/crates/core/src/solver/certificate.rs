//! Exact checks tying a curve's 3-division polynomial to the field K.

use num_traits::{One, Zero};
use serde::Serialize;

use super::forms::{astar, dstar, s3_star};
use super::Witness;
use crate::elliptic::Curve;
use crate::error::{Error, Result};
use crate::exactmath::{
    discriminant, factor_small, int, squarefree_part, tschirnhaus, Rational, SquarefreeClass,
    UniPoly,
};
use crate::json;
use crate::quartic::{d4_conditions, GaloisCase};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Check {
    PolynomialIdentity {
        what: String,
        #[serde(serialize_with = "json::poly")]
        lhs: UniPoly,
        #[serde(serialize_with = "json::poly")]
        rhs: UniPoly,
    },
    SquarefreeClassEqual {
        what: String,
        #[serde(serialize_with = "json::rational")]
        value: Rational,
        class: SquarefreeClass,
    },
    /// x^4 + a x^2 + b with neither b nor a^2 - 4b a square.
    D4Conditions {
        what: String,
        #[serde(serialize_with = "json::rational")]
        a: Rational,
        #[serde(serialize_with = "json::rational")]
        b: Rational,
    },
    /// Degrees of the distinct irreducible factors, ascending.
    FactorizationShape {
        what: String,
        #[serde(serialize_with = "json::poly")]
        poly: UniPoly,
        pattern: Vec<usize>,
    },
}

impl Check {
    pub fn holds(&self, factor_budget: u64) -> Result<bool> {
        Ok(match self {
            Check::PolynomialIdentity { lhs, rhs, .. } => lhs == rhs,
            Check::SquarefreeClassEqual { value, class, .. } => {
                !value.is_zero() && squarefree_part(value, factor_budget)? == *class
            }
            Check::D4Conditions { a, b, .. } => d4_conditions(a, b),
            Check::FactorizationShape { poly, pattern, .. } => {
                !poly.is_zero() && factor_small(poly).degree_pattern() == *pattern
            }
        })
    }

    pub fn what(&self) -> &str {
        match self {
            Check::PolynomialIdentity { what, .. }
            | Check::SquarefreeClassEqual { what, .. }
            | Check::D4Conditions { what, .. }
            | Check::FactorizationShape { what, .. } => what,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateChain {
    pub checks: Vec<Check>,
    pub conclusion: String,
}

impl CertificateChain {
    pub fn all_hold(&self, factor_budget: u64) -> Result<bool> {
        for c in &self.checks {
            if !c.holds(factor_budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Descriptions of the checks that fail.
    pub fn failures(&self, factor_budget: u64) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for c in &self.checks {
            if !c.holds(factor_budget)? {
                out.push(c.what().to_string());
            }
        }
        Ok(out)
    }
}

fn konst(c: Rational) -> UniPoly {
    UniPoly::constant(c)
}

fn even_quartic(a: &Rational, d: &Rational) -> UniPoly {
    let z = Rational::zero();
    UniPoly::new(vec![int(-3) * d * d, z.clone(), a.clone(), z, Rational::one()])
}

fn shape(what: &str, poly: &UniPoly, pattern: &[usize]) -> Check {
    Check::FactorizationShape { what: what.into(), poly: poly.clone(), pattern: pattern.to_vec() }
}

fn identity(what: &str, lhs: UniPoly, rhs: UniPoly) -> Check {
    Check::PolynomialIdentity { what: what.into(), lhs, rhs }
}

/// Quadratic factors of psi3, if its shape allows.
fn quadratic_factors(psi: &UniPoly) -> Vec<UniPoly> {
    factor_small(psi).factors.into_iter().filter(|(p, _)| p.deg() == 2).map(|(p, _)| p).collect()
}

/// -t(t-12)/8 - x/12 + x^2/(24(t^2+12t+144)).
pub fn d4_psi_transform(t: &Rational) -> UniPoly {
    let w = t * t + int(12) * t + int(144);
    UniPoly::new(vec![-(t * (t - int(12))) / int(8), -Rational::one() / int(12), Rational::one() / (int(24) * w)])
}

/// A(t) = -6(t-12)(t+24) and D(t) = 3t(t-12).
pub fn d4_even_coeffs(t: &Rational) -> (Rational, Rational) {
    (int(-6) * (t - int(12)) * (t + int(24)), int(3) * t * (t - int(12)))
}

/// The chain for a curve in the given case; `t` is the family parameter.
pub fn build_chain(
    case: &GaloisCase,
    curve: &Curve,
    t: &Rational,
    witness: &Witness,
    factor_budget: u64,
) -> Result<CertificateChain> {
    let psi = curve.psi3();
    let mut checks = Vec::new();
    match (case, witness) {
        (GaloisCase::C2, _) => {
            checks.push(shape("psi3 = linear * linear * quadratic", &psi, &[1, 1, 2]));
            let q = quadratic_factors(&psi).into_iter().next().unwrap_or_else(UniPoly::one);
            checks.push(Check::SquarefreeClassEqual {
                what: "disc of the quadratic factor of psi3".into(),
                value: discriminant(&q),
                class: SquarefreeClass::of_i64(-3),
            });
        }
        (GaloisCase::C2xC2 { delta1, delta2 }, _) => {
            checks.push(Check::SquarefreeClassEqual {
                what: "t^2 - 6t - 3".into(),
                value: t * t - int(6) * t - int(3),
                class: delta1.clone(),
            });
            checks.push(shape("psi3 = quadratic * quadratic", &psi, &[2, 2]));
            let mut qs = quadratic_factors(&psi);
            let classes: Vec<Option<SquarefreeClass>> =
                qs.iter().map(|q| squarefree_part(&discriminant(q), factor_budget).ok()).collect();
            if qs.len() == 2 && classes[1].as_ref() == Some(delta1) {
                qs.swap(0, 1);
            }
            for (q, class) in qs.iter().zip([delta1, delta2]) {
                checks.push(Check::SquarefreeClassEqual {
                    what: format!("disc of the factor {q} of psi3"),
                    value: discriminant(q),
                    class: class.clone(),
                });
            }
        }
        (GaloisCase::S3 { a, b }, Witness::S3 { r, n }) => {
            let (sa, sb) = s3_star(a, b, r);
            let z = Rational::zero();
            let cubic = UniPoly::new(vec![b.clone(), a.clone(), z.clone(), Rational::one()]);
            let star = UniPoly::new(vec![sb.clone(), sa.clone(), z, Rational::one()]);
            let tt = UniPoly::new(vec![int(2) * a / int(3), r.clone(), Rational::one()]);
            checks.push(identity("cubic transformed by x^2 + r x + 2a/3", tschirnhaus(&cubic, &tt), star.clone()));
            checks.push(shape("transformed cubic is irreducible", &star, &[3]));
            let n2 = n * n;
            let n3 = &n2 * n;
            checks.push(identity("-3(t+1) = a_* n^2", konst(int(-3) * (t + int(1))), konst(&sa * &n2)));
            checks.push(identity(
                "(t+1)(t+2) = -b_* n^3",
                konst((t + int(1)) * (t + int(2))),
                konst(-(&sb * &n3)),
            ));
            // 3 (x - 3(t+1)) * 64 g((x + t + 1)/4), g(z) = z^3 + a_* n^2 z - b_* n^3
            let s = UniPoly::new(vec![t + int(1), Rational::one()]);
            let g64 = &(&s.pow(3) + &s.scale(&(int(16) * &sa * &n2))) - &konst(int(64) * &sb * &n3);
            let lin = UniPoly::new(vec![int(-9) * (t + int(1)), int(3)]);
            checks.push(identity("psi3 = 3 (x - 3(t+1)) * cubic", psi.clone(), &lin * &g64));
            checks.push(shape("psi3 = linear * cubic", &psi, &[1, 3]));
        }
        (GaloisCase::D4 { a, d }, Witness::D4 { nm, .. }) => {
            let (n, m) = nm;
            let (sa, sd) = (astar(a, d).eval(n, m), dstar(a, d).eval(n, m));
            let tt = UniPoly::new(vec![Rational::zero(), m.clone(), Rational::zero(), n.clone()]);
            checks.push(identity(
                "even quartic transformed by n x^3 + m x",
                tschirnhaus(&even_quartic(a, d), &tt),
                even_quartic(&sa, &sd),
            ));
            let (at, dt) = d4_even_coeffs(t);
            checks.push(identity("A(t) = a_*", konst(at.clone()), konst(sa)));
            checks.push(identity("3 D(t)^2 = 3 d_*^2", konst(int(3) * &dt * &dt), konst(int(3) * &sd * &sd)));
            checks.push(Check::D4Conditions {
                what: "x^4 + A(t) x^2 - 3 D(t)^2".into(),
                a: at.clone(),
                b: int(-3) * &dt * &dt,
            });
            checks.push(identity(
                "psi3 transformed to x^4 + A(t) x^2 - 3 D(t)^2",
                tschirnhaus(&psi, &d4_psi_transform(t)),
                even_quartic(&at, &dt),
            ));
            checks.push(shape("psi3 is irreducible", &psi, &[4]));
        }
        (GaloisCase::S4 { .. }, _) => return Err(Error::Unsupported("S4 construction".into())),
        _ => return Err(Error::InvalidInput("witness does not match the case".into())),
    }
    Ok(CertificateChain { checks, conclusion: format!("splitting field of psi3 = {}", case.field_description()) })
}
