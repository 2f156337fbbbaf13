//! Validation and Galois classification of quartics with discriminant -3
//! modulo squares, and the normal forms used by the solver.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

pub use crate::case::CaseLabel;
use crate::error::{Error, Result};
use crate::exactmath::rational::RationalsByHeight;
use crate::exactmath::{
    discriminant, factor_small, int, is_square, rational_roots, resultant, same_square_class,
    squarefree_part, tschirnhaus, Factorization, Poly, Rational, SquarefreeClass, UniPoly,
};
use crate::json::PolyJson;

/// Classification outcome with the data each case needs downstream.
#[derive(Debug, Clone, PartialEq)]
pub enum GaloisCase {
    C2,
    /// Discriminant classes of the two quadratic factors.
    C2xC2 { delta1: SquarefreeClass, delta2: SquarefreeClass },
    /// The depressed cubic x^3 + a x + b.
    S3 { a: Rational, b: Rational },
    /// The even quartic x^4 + a x^2 - 3 d^2.
    D4 { a: Rational, d: Rational },
    /// The monic quartic.
    S4 { quartic: UniPoly },
}

impl GaloisCase {
    pub fn label(&self) -> CaseLabel {
        match self {
            GaloisCase::C2 => CaseLabel::C2,
            GaloisCase::C2xC2 { .. } => CaseLabel::C2xC2,
            GaloisCase::S3 { .. } => CaseLabel::S3,
            GaloisCase::D4 { .. } => CaseLabel::D4,
            GaloisCase::S4 { .. } => CaseLabel::S4,
        }
    }

    /// The splitting field, described by generators.
    pub fn field_description(&self) -> String {
        match self {
            GaloisCase::C2 => "Q(sqrt(-3))".into(),
            GaloisCase::C2xC2 { delta1, .. } => format!("Q(sqrt({delta1}), sqrt(-3))"),
            GaloisCase::S3 { a, b } => {
                let c = UniPoly::new(vec![b.clone(), a.clone(), Rational::zero(), Rational::one()]);
                format!("Q(root of {c}, sqrt(-3))")
            }
            GaloisCase::D4 { a, d } => {
                let r = a * a + int(12) * d * d;
                format!("Q(sqrt((-({a}) + sqrt({r}))/2), sqrt(-3))")
            }
            GaloisCase::S4 { quartic } => format!("splitting field of {quartic}"),
        }
    }
}

impl Serialize for GaloisCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaloisCase", 3)?;
        st.serialize_field("label", &self.label())?;
        match self {
            GaloisCase::C2 => st.serialize_field("payload", &serde_json::Value::Null)?,
            GaloisCase::C2xC2 { delta1, delta2 } => st.serialize_field(
                "payload",
                &serde_json::json!({ "delta1": delta1.to_string(), "delta2": delta2.to_string() }),
            )?,
            GaloisCase::S3 { a, b } => st.serialize_field(
                "payload",
                &serde_json::json!({ "a": a.to_string(), "b": b.to_string() }),
            )?,
            GaloisCase::D4 { a, d } => st.serialize_field(
                "payload",
                &serde_json::json!({ "a": a.to_string(), "d": d.to_string() }),
            )?,
            GaloisCase::S4 { quartic } => {
                st.serialize_field("payload", &PolyJson(quartic.clone()))?
            }
        }
        st.serialize_field("field", &self.field_description())?;
        st.end()
    }
}

/// A quartic that passed the discriminant test.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedQuartic {
    pub f: UniPoly,
    /// Product of the distinct monic irreducible factors.
    pub radical: UniPoly,
    pub factorization: Factorization,
    pub disc_class: SquarefreeClass,
}

impl Serialize for ValidatedQuartic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ValidatedQuartic", 4)?;
        st.serialize_field("f", &PolyJson(self.f.clone()))?;
        st.serialize_field("radical", &PolyJson(self.radical.clone()))?;
        let factors: Vec<serde_json::Value> = self
            .factorization
            .factors
            .iter()
            .map(|(p, e)| serde_json::json!({ "factor": PolyJson(p.clone()), "multiplicity": e }))
            .collect();
        st.serialize_field(
            "factorization",
            &serde_json::json!({ "unit": self.factorization.unit.to_string(), "factors": factors }),
        )?;
        st.serialize_field("disc_class", &self.disc_class.to_string())?;
        st.end()
    }
}

/// Checks deg f = 4 and that the product of the discriminants of the distinct
/// irreducible factors is -3 modulo squares.
pub fn validate(f: &UniPoly, factor_budget: u64) -> Result<ValidatedQuartic> {
    if f.degree() != Some(4) {
        return Err(Error::WrongDegree { expected: 4, found: f.degree().unwrap_or(0) });
    }
    let factorization = factor_small(f);
    let radical = factorization
        .factors
        .iter()
        .fold(UniPoly::one(), |acc, (p, _)| &acc * p);
    let prod = factorization
        .factors
        .iter()
        .filter(|(p, _)| p.deg() >= 2)
        .fold(Rational::one(), |acc, (p, _)| acc * discriminant(p));
    let disc_class = squarefree_part(&prod, factor_budget)?;
    if disc_class != SquarefreeClass::of_i64(-3) {
        return Err(Error::DiscriminantClassMismatch(disc_class.to_string()));
    }
    Ok(ValidatedQuartic { f: f.clone(), radical, factorization, disc_class })
}

/// theta^3 - q theta^2 - 4 s theta + (4 q s - r^2), whose roots are
/// a1 a2 + a3 a4 and its conjugates for x^4 + q x^2 + r x + s.
pub fn resolvent_cubic(q: &Rational, r: &Rational, s: &Rational) -> UniPoly {
    UniPoly::new(vec![
        int(4) * q * s - r * r,
        int(-4) * s,
        -q.clone(),
        Rational::one(),
    ])
}

/// (q, r, s) of the depressed monic form of a quartic.
fn depressed_coeffs(f: &UniPoly) -> (UniPoly, Rational, Rational, Rational) {
    let (g, _) = f.monic().depress();
    let (q, r, s) = (g.coeff(2), g.coeff(1), g.coeff(0));
    (g, q, r, s)
}

/// Neither b nor a^2 - 4b is a rational square. For x^4 + a x^2 + b this is
/// what lets an even Tschirnhaus transform keep the splitting field.
pub fn d4_conditions(a: &Rational, b: &Rational) -> bool {
    !b.is_zero() && is_square(b).is_none() && {
        let e = a * a - int(4) * b;
        !e.is_zero() && is_square(&e).is_none()
    }
}

/// Orders the two classes by absolute value, positive first.
fn order_deltas(x: SquarefreeClass, y: SquarefreeClass) -> (SquarefreeClass, SquarefreeClass) {
    let key = |c: &SquarefreeClass| (c.value().abs(), c.value().is_negative());
    if key(&y) < key(&x) {
        (y, x)
    } else {
        (x, y)
    }
}

pub fn classify(v: &ValidatedQuartic, factor_budget: u64, retry_budget: u32) -> Result<GaloisCase> {
    let factors: Vec<&UniPoly> = v.factorization.factors.iter().map(|(p, _)| p).collect();
    let pattern = v.factorization.degree_pattern();
    let nonlinear: Vec<&&UniPoly> = factors.iter().filter(|p| p.deg() >= 2).collect();
    match (pattern.last().copied(), nonlinear.len()) {
        (Some(2), 1) => Ok(GaloisCase::C2),
        (Some(2), 2) => {
            let d1 = squarefree_part(&discriminant(nonlinear[0]), factor_budget)?;
            let d2 = squarefree_part(&discriminant(nonlinear[1]), factor_budget)?;
            let (delta1, delta2) = order_deltas(d1, d2);
            Ok(GaloisCase::C2xC2 { delta1, delta2 })
        }
        (Some(3), 1) => {
            let (g, _) = nonlinear[0].depress();
            Ok(GaloisCase::S3 { a: g.coeff(1), b: g.coeff(0) })
        }
        (Some(4), 1) => {
            let (_, q, r, s) = depressed_coeffs(&v.f);
            let roots = rational_roots(&resolvent_cubic(&q, &r, &s));
            match roots.len() {
                0 => Ok(GaloisCase::S4 { quartic: v.f.monic() }),
                1 => {
                    let (a, d) = d4_normal_form(&v.f, retry_budget)?.pair();
                    Ok(GaloisCase::D4 { a, d })
                }
                _ => Err(Error::ImpossibleClass(format!(
                    "resolvent cubic of {} has {} rational roots",
                    v.f,
                    roots.len()
                ))),
            }
        }
        _ => Err(Error::ImpossibleClass(format!("factor degrees {pattern:?}"))),
    }
}

/// An even model x^4 + a x^2 - 3 d^2 with the same splitting field, and how
/// it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Evenized {
    pub a: Rational,
    pub d: Rational,
    /// Preliminary transform y = x + c x^2 applied before taking root
    /// differences; `None` when the input was already even and used as is.
    pub pre: Option<Rational>,
    pub even: UniPoly,
}

impl Evenized {
    pub fn pair(&self) -> (Rational, Rational) {
        (self.a.clone(), self.d.clone())
    }

    /// Re-derives the chain: `even` divides the polynomial of root
    /// differences of the transformed input, is irreducible, and meets the
    /// D4 conditions with constant term of class -3.
    pub fn certify(&self, f: &UniPoly) -> bool {
        let b = int(-3) * &self.d * &self.d;
        let want = UniPoly::new(vec![b.clone(), Rational::zero(), self.a.clone(), Rational::zero(), Rational::one()]);
        if want != self.even || self.d.is_zero() || !d4_conditions(&self.a, &b) {
            return false;
        }
        if factor_small(&self.even).degree_pattern() != vec![4] {
            return false;
        }
        match &self.pre {
            None => self.even == f.monic(),
            Some(c) => {
                let g = pre_transform(f, c);
                root_differences(&g).div_rem(&self.even).1.is_zero()
            }
        }
    }
}

fn pre_transform(f: &UniPoly, c: &Rational) -> UniPoly {
    tschirnhaus(&f.monic(), &UniPoly::new(vec![Rational::zero(), Rational::one(), c.clone()]))
}

/// Res_y(f(y), f(x + y)) / x^deg f: the monic polynomial whose roots are the
/// differences a_i - a_j, i != j.
pub fn root_differences(f: &UniPoly) -> UniPoly {
    let lift = |p: &UniPoly| -> Poly<UniPoly> { p.map(|c| UniPoly::constant(c.clone())) };
    let fy = lift(f);
    let x_plus_y = Poly::new(vec![UniPoly::x(), UniPoly::one()]);
    let fxy = fy.compose(&x_plus_y);
    let r = resultant(&fy, &fxy);
    let n = f.deg();
    UniPoly::new(r.coeffs()[n..].to_vec()).monic()
}

/// The even quartic of root differences (a1 - a3), (a2 - a4) and their
/// negatives, read off from the rational resolvent root.
fn even_from_depressed(q: &Rational, r: &Rational, s: &Rational) -> Option<(Rational, Rational)> {
    let roots = rational_roots(&resolvent_cubic(q, r, s));
    if roots.len() != 1 {
        return None;
    }
    let th = &roots[0].0;
    let a = int(2) * th + int(2) * q;
    let u = th - q;
    let c = &u * &u - int(4) * th * &u + int(16) * s;
    Some((a, c))
}

/// For a D4 quartic: the input itself when it already has the shape
/// x^4 + a x^2 - 3 d^2 with the D4 conditions, otherwise the even quartic
/// of root differences, after a preliminary transform when that one is
/// degenerate.
pub fn d4_normal_form(f: &UniPoly, retry_budget: u32) -> Result<Evenized> {
    let m = f.monic();
    if m.coeff(3).is_zero() && m.coeff(1).is_zero() {
        let (a, b) = (m.coeff(2), m.coeff(0));
        if let Some(d) = is_square(&(-&b / int(3))) {
            if d4_conditions(&a, &b) {
                return Ok(Evenized { a, d, pre: None, even: m });
            }
        }
    }
    evenize(f, retry_budget)
}

/// Even model from root differences of y = x + c x^2 applied to f, for
/// c = 0, 1, -1, 2, ... until the result is nondegenerate.
pub fn evenize(f: &UniPoly, retry_budget: u32) -> Result<Evenized> {
    for c in RationalsByHeight::new().take(retry_budget.max(1) as usize) {
        let g = pre_transform(f, &c);
        let (_, q, r, s) = depressed_coeffs(&g);
        let Some((a, konst)) = even_from_depressed(&q, &r, &s) else { continue };
        let Some(d) = is_square(&(-&konst / int(3))) else { continue };
        let even = UniPoly::new(vec![konst.clone(), Rational::zero(), a.clone(), Rational::zero(), Rational::one()]);
        let out = Evenized { a, d, pre: Some(c), even };
        if out.certify(f) {
            return Ok(out);
        }
    }
    Err(Error::EvenizeDegenerate(retry_budget))
}

/// Whether two D4 normal forms give the same square class of
/// a^2 + 12 d^2 (the quadratic subfield other than Q(sqrt(-3))).
pub fn same_d4_field_class(p: (&Rational, &Rational), q: (&Rational, &Rational)) -> bool {
    let r = |a: &Rational, d: &Rational| a * a + int(12) * d * d;
    same_square_class(&r(p.0, p.1), &r(q.0, q.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::frac;

    const FB: u64 = 10_000_000;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn class(f: &UniPoly) -> GaloisCase {
        classify(&validate(f, FB).unwrap(), FB, 64).unwrap()
    }

    #[test]
    fn validation() {
        assert!(validate(&p(&[-12, 0, 2, 0, 1]), FB).is_ok());
        let v = validate(&p(&[0, 0, 3, 0, 1]), FB).unwrap();
        assert_eq!(v.radical, p(&[0, 3, 0, 1]));
        assert_eq!(
            validate(&p(&[-1, 0, 0, 0, 1]), FB),
            Err(Error::DiscriminantClassMismatch("-1".into()))
        );
        assert!(matches!(validate(&p(&[1, 0, 1]), FB), Err(Error::WrongDegree { .. })));
    }

    #[test]
    fn resolvents() {
        assert_eq!(resolvent_cubic(&int(2), &int(0), &int(-12)), &p(&[-2, 1]) * &p(&[48, 0, 1]));
        assert_eq!(resolvent_cubic(&int(1), &int(0), &int(-3)), &p(&[-1, 1]) * &p(&[12, 0, 1]));
        assert_eq!(resolvent_cubic(&int(0), &int(0), &int(0)), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn examples() {
        assert_eq!(class(&p(&[0, 0, 3, 0, 1])), GaloisCase::C2);
        assert_eq!(
            class(&(&p(&[2, 0, 1]) * &p(&[-6, 0, 1]))),
            GaloisCase::C2xC2 { delta1: SquarefreeClass::of_i64(-2), delta2: SquarefreeClass::of_i64(6) }
        );
        assert_eq!(
            class(&(&p(&[-2, 0, 1]) * &p(&[6, 0, 1]))),
            GaloisCase::C2xC2 { delta1: SquarefreeClass::of_i64(2), delta2: SquarefreeClass::of_i64(-6) }
        );
        assert_eq!(class(&p(&[0, 2, 0, 0, 1])), GaloisCase::S3 { a: int(0), b: int(2) });
        assert_eq!(class(&p(&[-3, 0, 1, 0, 1])), GaloisCase::D4 { a: int(1), d: int(1) });
        assert_eq!(class(&p(&[-12, 0, 2, 0, 1])), GaloisCase::D4 { a: int(2), d: int(2) });
    }

    #[test]
    fn evenize_examples() {
        let e = evenize(&p(&[-12, 0, 2, 0, 1]), 8).unwrap();
        assert_eq!((e.pair(), e.even.clone()), ((int(8), int(8)), p(&[-192, 0, 8, 0, 1])));
        let e = evenize(&p(&[-3, 0, 1, 0, 1]), 8).unwrap();
        assert_eq!((e.pair(), e.even.clone()), ((int(4), int(4)), p(&[-48, 0, 4, 0, 1])));
        let e = evenize(&p(&[-192, 0, 8, 0, 1]), 8).unwrap();
        assert_eq!(e.pair(), (int(32), int(32)));
        assert!(e.certify(&p(&[-192, 0, 8, 0, 1])));
    }

    #[test]
    fn evenize_after_shift_and_scaling() {
        // x^4 + 2x^2 - 12 at x -> 2x + 1, not monic, not even
        let f = p(&[-12, 0, 2, 0, 1]).compose(&p(&[1, 2]));
        let e = evenize(&f, 8).unwrap();
        assert!(e.certify(&f));
        assert!(same_d4_field_class((&e.a, &e.d), (&int(2), &int(2))));
        match class(&f) {
            GaloisCase::D4 { a, d } => assert!(same_d4_field_class((&a, &d), (&int(2), &int(2)))),
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn root_difference_polynomial() {
        // roots 0, 1: differences +-1
        assert_eq!(root_differences(&p(&[0, -1, 1])), p(&[-1, 0, 1]));
        let f = p(&[0, 2, 0, 0, 1]);
        assert_eq!(root_differences(&f).deg(), 12);
    }

    #[test]
    fn s4_and_shapes() {
        let f = crate::elliptic::family(CaseLabel::S4, &int(2)).unwrap().psi3();
        assert_eq!(class(&f).label(), CaseLabel::S4);
        let f = crate::elliptic::family(CaseLabel::D4, &frac(5, 3)).unwrap().psi3();
        assert_eq!(class(&f).label(), CaseLabel::D4);
    }
}
