//! Serialization helpers: rationals as "p/q" strings, polynomials as
//! degree-descending coefficient arrays plus a pretty string.

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::Serializer;

use crate::exactmath::{Rational, UniPoly};

pub fn rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn opt_rational<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

pub fn rationals<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn point<S: Serializer>(p: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
    rationals(&[p.0.clone(), p.1.clone()], s)
}

pub fn poly<S: Serializer>(p: &UniPoly, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Poly", 2)?;
    let c: Vec<String> = p.descending().iter().map(|c| c.to_string()).collect();
    st.serialize_field("coeffs", &c)?;
    st.serialize_field("text", &p.to_string())?;
    st.end()
}

/// Wrapper that serializes a polynomial in the format above.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PolyJson(#[serde(serialize_with = "poly")] pub UniPoly);
