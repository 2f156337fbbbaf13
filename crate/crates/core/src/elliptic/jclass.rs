//! Which of the images F1(Q*), G1(Q*), G1(G2(Q*)), F1(F2(Q*)),
//! G1(G2(G3(Q*))) contain a given j.

use num_traits::{One, Zero};
use serde::Serialize;

use super::is_cm_j;
use crate::case::CaseLabel;
use crate::exactmath::{int, is_cube, is_square, rational_roots, Rational, UniPoly};
use crate::json;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JClass {
    #[serde(serialize_with = "json::rational")]
    pub j: Rational,
    #[serde(serialize_with = "json::opt_rational")]
    pub f1: Option<Rational>,
    #[serde(serialize_with = "json::opt_rational")]
    pub g1: Option<Rational>,
    #[serde(serialize_with = "json::opt_rational")]
    pub g1g2: Option<Rational>,
    #[serde(serialize_with = "json::opt_rational")]
    pub f1f2: Option<Rational>,
    #[serde(serialize_with = "json::opt_rational")]
    pub g1g2g3: Option<Rational>,
    pub cm: bool,
    /// The family that j belongs to most specifically.
    pub row: CaseLabel,
}

/// Nonzero t with F1(t) = j, from the roots of 27(t+1)(t+9)^3 - j t^3.
fn f1_fiber(j: &Rational) -> Vec<Rational> {
    let p = &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[9, 1]).pow(3);
    let f = &p.scale(&int(27)) - &UniPoly::monomial(j.clone(), 3);
    rational_roots(&f).into_iter().map(|(r, _)| r).filter(|r| !r.is_zero()).collect()
}

/// Nonzero s with G2(s) = c: 3s^2 - (6 + c)s - 9 = 0.
fn g2_fiber(c: &Rational) -> Vec<Rational> {
    let b = int(6) + c;
    match is_square(&(&b * &b + int(108))) {
        Some(r) => {
            let mut v = vec![(&b - &r) / int(6), (&b + &r) / int(6)];
            v.sort();
            v.dedup();
            v
        }
        None => vec![],
    }
}

/// Nonzero v with G3(v) = w: v^2 + (3 - w)v + 3 = 0.
fn g3_fiber(w: &Rational) -> Vec<Rational> {
    let b = int(3) - w;
    match is_square(&(&b * &b - int(12))) {
        Some(r) => {
            let mut v = vec![(-&b - &r) / int(2), (-&b + &r) / int(2)];
            v.sort();
            v.dedup();
            v
        }
        None => vec![],
    }
}

/// Nonzero s with F2(s) = u, using F2(s) = (s+1)^3 - 1.
fn f2_fiber(u: &Rational) -> Option<Rational> {
    let s = is_cube(&(u + Rational::one()))? - Rational::one();
    (!s.is_zero()).then_some(s)
}

pub fn classify_from_j(j: &Rational) -> JClass {
    let f1s = f1_fiber(j);
    let f1 = f1s.first().cloned();
    let f1f2 = f1s.iter().find_map(f2_fiber);
    let g1 = is_cube(j).filter(|c| !c.is_zero());
    let g2s = g1.as_ref().map(g2_fiber).unwrap_or_default();
    let g1g2 = g2s.first().cloned();
    let g1g2g3 = g2s.iter().find_map(|w| g3_fiber(w).into_iter().next());
    let row = if f1f2.is_some() || g1g2g3.is_some() {
        CaseLabel::C2
    } else if g1g2.is_some() {
        CaseLabel::C2xC2
    } else if f1.is_some() {
        CaseLabel::S3
    } else if g1.is_some() {
        CaseLabel::D4
    } else {
        CaseLabel::S4
    };
    JClass { j: j.clone(), f1, g1, g1g2, f1f2, g1g2g3, cm: is_cm_j(j), row }
}
