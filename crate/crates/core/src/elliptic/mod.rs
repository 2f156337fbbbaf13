//! Short Weierstrass curves, their 3-division polynomials, the parametric
//! families and the j-invariant classifier.

mod families;
mod jclass;

pub use families::{
    c2xc2_alt_first_factor, family, family_ab, family_j, family_j_identity, psi3_factored,
    psi3_identity, psi3_symbolic, specialize, RatFn, F1, F2, G1, G2, G3,
};
pub use jclass::{classify_from_j, JClass};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational, UniPoly};
use crate::json;

/// y^2 = x^3 + a x + b.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Curve {
    #[serde(rename = "A", serialize_with = "json::rational")]
    pub a: Rational,
    #[serde(rename = "B", serialize_with = "json::rational")]
    pub b: Rational,
}

impl Curve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let c = Curve { a, b };
        if c.disc_factor().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    /// 4A^3 + 27B^2.
    pub fn disc_factor(&self) -> Rational {
        int(4) * &self.a * &self.a * &self.a + int(27) * &self.b * &self.b
    }

    pub fn j_invariant(&self) -> Result<Rational> {
        j_invariant(self)
    }

    pub fn psi3(&self) -> UniPoly {
        psi3(self)
    }
}

impl std::fmt::Display for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^2 = {}", UniPoly::new(vec![self.b.clone(), self.a.clone(), int(0), int(1)]))
    }
}

/// j = 6912 A^3 / (4A^3 + 27B^2).
pub fn j_invariant(e: &Curve) -> Result<Rational> {
    let d = e.disc_factor();
    if d.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(int(6912) * &e.a * &e.a * &e.a / d)
}

/// 3x^4 + 6A x^2 + 12B x - A^2.
pub fn psi3(e: &Curve) -> UniPoly {
    UniPoly::new(vec![-(&e.a * &e.a), int(12) * &e.b, int(6) * &e.a, int(0), int(3)])
}

/// d y^2 = x^3 + Ax + B, written as y^2 = x^3 + d^2 A x + d^3 B.
pub fn quadratic_twist(e: &Curve, d: &Rational) -> Result<Curve> {
    if d.is_zero() {
        return Err(Error::InvalidInput("twist by 0".into()));
    }
    Curve::new(d * d * &e.a, d * d * d * &e.b)
}

/// The thirteen j-invariants of elliptic curves over Q with complex
/// multiplication (class number one orders).
pub const CM_J: [i64; 13] = [
    0,
    1728,
    -3375,
    8000,
    -32768,
    54000,
    287496,
    -884736,
    -12288000,
    16581375,
    -884736000,
    -147197952000,
    -262537412640768000,
];

pub fn is_cm_j(j: &Rational) -> bool {
    CM_J.iter().any(|&c| *j == int(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{factor_small, frac};

    #[test]
    fn j_examples() {
        assert_eq!(j_invariant(&Curve::new(int(1), int(0)).unwrap()).unwrap(), int(1728));
        assert_eq!(j_invariant(&Curve::new(int(0), int(1)).unwrap()).unwrap(), int(0));
        assert_eq!(Curve::new(int(-3), int(2)), Err(Error::SingularCurve));
    }

    #[test]
    fn psi3_examples() {
        let e = Curve::new(int(0), int(1)).unwrap();
        assert_eq!(psi3(&e), UniPoly::from_ints(&[0, 12, 0, 0, 3]));
        let e = Curve::new(int(-6), frac(-13, 4)).unwrap();
        let f = factor_small(&psi3(&e));
        assert_eq!(f.unit, int(3));
        let want = [
            UniPoly::from_ints(&[-4, 1]),
            UniPoly::from_ints(&[3, 1]),
            UniPoly::from_ints(&[1, 1, 1]),
        ];
        for w in &want {
            assert!(f.factors.iter().any(|(g, e)| g == w && *e == 1), "missing {w}");
        }
    }

    #[test]
    fn twists() {
        let e = Curve::new(int(-6), frac(-13, 4)).unwrap();
        assert_eq!(quadratic_twist(&e, &int(1)).unwrap(), e);
        for d in [int(4), frac(-3, 5), int(7)] {
            let t = quadratic_twist(&e, &d).unwrap();
            assert_eq!(t.j_invariant(), e.j_invariant());
        }
    }

    #[test]
    fn cm_list() {
        for j in CM_J {
            assert!(is_cm_j(&int(j)));
        }
        assert!(!is_cm_j(&int(432)));
        // explicit models reaching four of the values
        let check = |a: i64, b: i64, j: i64| {
            assert_eq!(Curve::new(int(a), int(b)).unwrap().j_invariant().unwrap(), int(j));
        };
        check(-15, 22, 54000);
        check(-35, 98, -3375);
        check(-11, 14, 287496);
        check(-595, 5586, 16581375);
    }
}
