//! Obstructions and explicit solutions of the embedding problems: elliptic
//! curves whose 3-division polynomial has splitting field K.

mod certificate;
pub mod forms;

pub use certificate::{build_chain, d4_even_coeffs, d4_psi_transform, CertificateChain, Check};

use std::collections::HashSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::budget::Budgets;
use crate::elliptic::{family, is_cm_j, quadratic_twist, Curve};
use crate::error::{Error, Result};
use crate::exactmath::rational::RationalsByHeight;
use crate::exactmath::{frac, int, is_square, squarefree_part, Rational, SquarefreeClass, UniPoly};
use crate::json;
use crate::quadforms::{
    conic_parametrize, conic_point, hilbert_global, involution_c, BinaryForm, ConicParam,
    ObstructionReport, Point, SymbolArguments, Verdict,
};
use crate::quartic::{classify, d4_normal_form, validate, GaloisCase};
use forms::{astar, d4_q, d4_qprime, dstar, s3_star};

/// How a record's parameter was produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// The curve y^2 = x^3 - 6x - 13/4.
    Explicit,
    Family {
        #[serde(serialize_with = "json::rational")]
        t: Rational,
    },
    /// A point (u, s) of u^2 - delta1 s^2 = 12, t = u + 3.
    Conic {
        #[serde(serialize_with = "json::opt_rational")]
        r: Option<Rational>,
        #[serde(serialize_with = "json::point")]
        point: Point,
    },
    S3 {
        #[serde(serialize_with = "json::rational")]
        r: Rational,
        #[serde(serialize_with = "json::rational")]
        n: Rational,
    },
    /// `conic` lies on 1728 (a_* + 6 d_*) = 1, `nm` is its image on
    /// (a_* + 2 d_*)^2 = 1728 (a_* + 6 d_*).
    D4 {
        #[serde(serialize_with = "json::opt_rational")]
        r: Option<Rational>,
        #[serde(serialize_with = "json::point")]
        conic: Point,
        #[serde(serialize_with = "json::point")]
        nm: Point,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionRecord {
    /// Position in the parameter enumeration.
    pub index: usize,
    pub case: GaloisCase,
    #[serde(serialize_with = "json::rational")]
    pub t: Rational,
    /// The curve is this quadratic twist of the family member at t.
    #[serde(serialize_with = "json::rational")]
    pub twist: Rational,
    pub curve: Curve,
    #[serde(serialize_with = "json::rational")]
    pub j: Rational,
    pub non_cm: bool,
    pub witness: Witness,
    pub certificate: CertificateChain,
}

fn symbol_report(case: &GaloisCase, alpha: Rational, beta: Rational, budgets: &Budgets) -> Result<ObstructionReport> {
    let g = hilbert_global(&alpha, &beta, budgets.factor)?;
    let reduced = (squarefree_part(&alpha, budgets.factor)?, squarefree_part(&beta, budgets.factor)?);
    Ok(ObstructionReport {
        case: case.clone(),
        global_symbol: if g.value == 1 { Verdict::Plus } else { Verdict::Minus },
        entries: g.entries,
        arguments: Some(SymbolArguments { alpha, beta, reduced }),
    })
}

pub fn obstruction(case: &GaloisCase, budgets: &Budgets) -> Result<ObstructionReport> {
    let plain = |v| ObstructionReport { case: case.clone(), global_symbol: v, entries: vec![], arguments: None };
    match case {
        GaloisCase::C2 | GaloisCase::S3 { .. } => Ok(plain(Verdict::Trivial)),
        GaloisCase::S4 { .. } => Ok(plain(Verdict::Unsupported)),
        GaloisCase::C2xC2 { delta1, .. } => symbol_report(case, delta1.to_rational(), int(3), budgets),
        GaloisCase::D4 { a, d } => {
            if a.is_zero() {
                Ok(plain(Verdict::Trivial))
            } else {
                symbol_report(case, int(3) * (a * a + int(12) * d * d), int(2) * a, budgets)
            }
        }
    }
}

fn require_solvable(case: &GaloisCase, budgets: &Budgets) -> Result<()> {
    match obstruction(case, budgets)?.global_symbol {
        Verdict::Minus => Err(Error::Obstructed),
        Verdict::Unsupported => Err(Error::Unsupported("construction for S4".into())),
        _ => Ok(()),
    }
}

/// The record for the curve twist(family(case, t)), with its chain.
pub fn make_record(
    index: usize,
    case: &GaloisCase,
    t: Rational,
    twist: Rational,
    witness: Witness,
    budgets: &Budgets,
) -> Result<SolutionRecord> {
    let curve = quadratic_twist(&family(case.label(), &t)?, &twist)?;
    let j = curve.j_invariant()?;
    let certificate = build_chain(case, &curve, &t, &witness, budgets.factor)?;
    Ok(SolutionRecord { index, case: case.clone(), t, twist, non_cm: !is_cm_j(&j), j, curve, witness, certificate })
}

/// Re-derives the curve, j and the whole chain from (case, t, twist,
/// witness) and re-runs every check.
pub fn verify_record(rec: &SolutionRecord, budgets: &Budgets) -> bool {
    let run = || -> Result<bool> {
        let curve = quadratic_twist(&family(rec.case.label(), &rec.t)?, &rec.twist)?;
        if curve != rec.curve || curve.j_invariant()? != rec.j || rec.non_cm == is_cm_j(&rec.j) {
            return Ok(false);
        }
        let chain = build_chain(&rec.case, &curve, &rec.t, &rec.witness, budgets.factor)?;
        Ok(chain == rec.certificate && chain.all_hold(budgets.factor)?)
    };
    run().unwrap_or(false)
}

/// The record verifies and its case is the classification of f, with the
/// normal form read off from f.
pub fn verify_certificate(rec: &SolutionRecord, f: &UniPoly) -> bool {
    verify_certificate_with(rec, f, &Budgets::default())
}

pub fn verify_certificate_with(rec: &SolutionRecord, f: &UniPoly, budgets: &Budgets) -> bool {
    let run = || -> Result<bool> {
        let v = validate(f, budgets.factor)?;
        if classify(&v, budgets.factor, budgets.retry)? != rec.case {
            return Ok(false);
        }
        if let GaloisCase::D4 { .. } = rec.case {
            if !d4_normal_form(f, budgets.retry)?.certify(f) {
                return Ok(false);
            }
        }
        Ok(verify_record(rec, budgets))
    };
    run().unwrap_or(false)
}

/// Collects `count` verified non-CM records with distinct j from the
/// candidates, skipping degenerate parameters up to the retry budget.
fn collect<I, F>(candidates: I, count: usize, budgets: &Budgets, mut make: F) -> Result<Vec<SolutionRecord>>
where
    I: IntoIterator,
    F: FnMut(usize, I::Item) -> Result<SolutionRecord>,
{
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut skipped = 0u32;
    for (index, c) in candidates.into_iter().enumerate() {
        if out.len() >= count {
            break;
        }
        match make(index, c) {
            Ok(rec) => {
                if !rec.non_cm || seen.contains(&rec.j) {
                    continue;
                }
                if !verify_record(&rec, budgets) {
                    skipped += 1;
                } else {
                    seen.insert(rec.j.clone());
                    out.push(rec);
                    continue;
                }
            }
            Err(Error::DegenerateParameter(_)) | Err(Error::SingularCurve) => skipped += 1,
            Err(e) => return Err(e),
        }
        if skipped > budgets.retry {
            return Err(Error::SearchBudgetExceeded(budgets.retry as u64));
        }
    }
    Ok(out)
}

/// r = infinity, then rationals by increasing height.
fn parameters() -> impl Iterator<Item = Option<Rational>> {
    std::iter::once(None).chain(RationalsByHeight::new().map(Some))
}

fn conic_points(param: &ConicParam) -> impl Iterator<Item = (Option<Rational>, Point)> + '_ {
    parameters().filter_map(move |r| match &r {
        None => Some((None, param.at_infinity())),
        Some(x) => param.eval(x).map(|p| (r.clone(), p)),
    })
}

pub fn solve_c2(count: usize, budgets: &Budgets) -> Result<Vec<SolutionRecord>> {
    let case = GaloisCase::C2;
    let candidates = std::iter::once(None).chain(RationalsByHeight::new().filter(|t| !t.is_zero()).map(Some));
    collect(candidates, count, budgets, |i, t| match t {
        None => make_record(i, &case, int(1), frac(-1, 4), Witness::Explicit, budgets),
        Some(t) => make_record(i, &case, t.clone(), Rational::one(), Witness::Family { t }, budgets),
    })
}

pub fn solve_c2xc2(
    delta1: &SquarefreeClass,
    delta2: &SquarefreeClass,
    count: usize,
    budgets: &Budgets,
) -> Result<Vec<SolutionRecord>> {
    let case = GaloisCase::C2xC2 { delta1: delta1.clone(), delta2: delta2.clone() };
    require_solvable(&case, budgets)?;
    let q = BinaryForm::new(int(1), -delta1.to_rational(), int(0));
    let base = conic_point(&q, &int(12), budgets.factor, budgets.height)?.ok_or(Error::Obstructed)?;
    let param = conic_parametrize(&q, &int(12), &base)?;
    collect(conic_points(&param), count, budgets, |i, (r, p)| {
        let t = &p.0 + int(3);
        make_record(i, &case, t, Rational::one(), Witness::Conic { r, point: p }, budgets)
    })
}

pub fn solve_s3(a: &Rational, b: &Rational, count: usize, budgets: &Budgets) -> Result<Vec<SolutionRecord>> {
    let case = GaloisCase::S3 { a: a.clone(), b: b.clone() };
    let candidates = RationalsByHeight::new().flat_map(|r| [(r.clone(), 1), (r, -1)]);
    collect(candidates, count, budgets, |i, (r, sign)| {
        let (sa, sb) = s3_star(a, b, &r);
        if sa.is_zero() {
            return Err(Error::DegenerateParameter(format!("a_*({r}) = 0")));
        }
        let rad = int(81) * &sb * &sb + int(12) * &sa * &sa * &sa;
        let root = is_square(&rad)
            .ok_or_else(|| Error::InvalidInput(format!("radicand {rad} is not a square")))?;
        let n = (int(-9) * &sb + int(sign) * root) / (int(2) * &sa * &sa);
        if n.is_zero() {
            return Err(Error::DegenerateParameter(format!("n = 0 at r = {r}")));
        }
        let t = -(&sa * &n * &n) / int(3) - int(1);
        if t.is_zero() || t == int(-1) {
            return Err(Error::DegenerateParameter(format!("t = {t}")));
        }
        make_record(i, &case, t, Rational::one(), Witness::S3 { r, n }, budgets)
    })
}

/// The point of (a_* + 2 d_*)^2 = 1728 (a_* + 6 d_*) matching a point of
/// 1728 (a_* + 6 d_*) = 1, and its parameter t.
pub fn d4_point_to_t(a: &Rational, d: &Rational, p: &Point) -> Result<(Point, Rational)> {
    let nm = involution_c(&d4_qprime(a, d), &d4_q(a, d), p)?;
    let sa = astar(a, d).eval(&nm.0, &nm.1);
    let sd = dstar(a, d).eval(&nm.0, &nm.1);
    let t = (int(1728) - sa - int(2) * sd) / int(144);
    Ok((nm, t))
}

/// The conic 1728 (a_* + 6 d_*) = 1 with its parametrization.
pub fn d4_conic(a: &Rational, d: &Rational, budgets: &Budgets) -> Result<ConicParam> {
    let q = d4_q(a, d).scale(&int(-1));
    let base = conic_point(&q, &int(1), budgets.factor, budgets.height)?.ok_or(Error::Obstructed)?;
    conic_parametrize(&q, &int(1), &base)
}

pub fn solve_d4(a: &Rational, d: &Rational, count: usize, budgets: &Budgets) -> Result<Vec<SolutionRecord>> {
    let case = GaloisCase::D4 { a: a.clone(), d: d.clone() };
    require_solvable(&case, budgets)?;
    let param = d4_conic(a, d, budgets)?;
    collect(conic_points(&param), count, budgets, |i, (r, p)| {
        let (nm, t) = d4_point_to_t(a, d, &p).map_err(|e| match e {
            Error::AnisotropyViolated => Error::DegenerateParameter(format!("Q' vanishes at {p:?}")),
            e => e,
        })?;
        make_record(i, &case, t, Rational::one(), Witness::D4 { r, conic: p, nm }, budgets)
    })
}

pub fn solve(case: &GaloisCase, count: usize, budgets: &Budgets) -> Result<Vec<SolutionRecord>> {
    match case {
        GaloisCase::C2 => solve_c2(count, budgets),
        GaloisCase::C2xC2 { delta1, delta2 } => solve_c2xc2(delta1, delta2, count, budgets),
        GaloisCase::S3 { a, b } => solve_s3(a, b, count, budgets),
        GaloisCase::D4 { a, d } => solve_d4(a, d, count, budgets),
        GaloisCase::S4 { .. } => Err(Error::Unsupported("construction for S4".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budgets {
        Budgets::default()
    }

    fn sq(v: i64) -> SquarefreeClass {
        SquarefreeClass::of_i64(v)
    }

    #[test]
    fn obstructions() {
        let c = GaloisCase::C2xC2 { delta1: sq(2), delta2: sq(-6) };
        let r = obstruction(&c, &b()).unwrap();
        assert_eq!(r.global_symbol, Verdict::Minus);
        assert_eq!(r.failing_places().iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["2", "3"]);
        let c = GaloisCase::C2xC2 { delta1: sq(-2), delta2: sq(6) };
        assert_eq!(obstruction(&c, &b()).unwrap().global_symbol, Verdict::Plus);
        let r = obstruction(&GaloisCase::D4 { a: int(4), d: int(4) }, &b()).unwrap();
        assert_eq!(r.global_symbol, Verdict::Minus);
        assert_eq!(r.arguments.unwrap().reduced, (sq(39), sq(2)));
        let r = obstruction(&GaloisCase::D4 { a: int(8), d: int(8) }, &b()).unwrap();
        assert_eq!(r.global_symbol, Verdict::Plus);
        // 3(64 + 768) = 2496 = 156 * 16, squarefree part 39
        assert_eq!(r.arguments.unwrap().reduced, (sq(39), sq(1)));
        let r = obstruction(&GaloisCase::D4 { a: int(0), d: int(5) }, &b()).unwrap();
        assert_eq!(r.global_symbol, Verdict::Trivial);
        assert_eq!(obstruction(&GaloisCase::C2, &b()).unwrap().global_symbol, Verdict::Trivial);
    }

    #[test]
    fn c2_records() {
        let recs = solve_c2(3, &b()).unwrap();
        assert_eq!(recs[0].curve, Curve::new(int(-6), frac(-13, 4)).unwrap());
        for r in &recs {
            assert!(verify_record(r, &b()));
        }
    }

    #[test]
    fn c2xc2_records() {
        let recs = solve_c2xc2(&sq(-2), &sq(6), 3, &b()).unwrap();
        assert_eq!(recs[0].t, int(5));
        assert_eq!(recs[1].t, int(1));
        assert!(recs.iter().all(|r| verify_record(r, &b())));
        assert_eq!(solve_c2xc2(&sq(2), &sq(-6), 3, &b()), Err(Error::Obstructed));
    }

    #[test]
    fn s3_records() {
        let recs = solve_s3(&int(0), &int(2), 3, &b()).unwrap();
        let r1 = recs.iter().find(|r| matches!(&r.witness, Witness::S3 { r, .. } if *r == int(1))).unwrap();
        assert_eq!((r1.t.clone(), r1.j.clone()), (int(-3), int(432)));
        assert!(recs.iter().all(|r| verify_record(r, &b())));
    }

    #[test]
    fn d4_records() {
        let recs = solve_d4(&int(2), &int(2), 3, &b()).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| verify_record(r, &b())));
        assert_eq!(solve_d4(&int(1), &int(1), 1, &b()), Err(Error::Obstructed));
    }

    #[test]
    fn tampering_breaks_verification() {
        let mut rec = solve_c2xc2(&sq(-2), &sq(6), 1, &b()).unwrap().remove(0);
        rec.t += int(1);
        assert!(!verify_record(&rec, &b()));
    }
}
