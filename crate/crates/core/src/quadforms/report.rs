//! Obstruction reports: the Hilbert symbol deciding an embedding problem.

use serde::Serialize;

use super::hilbert::Place;
use crate::exactmath::{Rational, SquarefreeClass};
use crate::json;
use crate::quartic::GaloisCase;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    Trivial,
    Unsupported,
}

impl Verdict {
    /// Whether the embedding problem is solvable; `None` when unsupported.
    pub fn solvable(&self) -> Option<bool> {
        match self {
            Verdict::Plus | Verdict::Trivial => Some(true),
            Verdict::Minus => Some(false),
            Verdict::Unsupported => None,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Plus => "+1",
            Verdict::Minus => "-1",
            Verdict::Trivial => "trivial",
            Verdict::Unsupported => "unsupported",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymbolArguments {
    #[serde(serialize_with = "json::rational")]
    pub alpha: Rational,
    #[serde(serialize_with = "json::rational")]
    pub beta: Rational,
    /// The same pair reduced to squarefree representatives.
    pub reduced: (SquarefreeClass, SquarefreeClass),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub case: GaloisCase,
    pub global_symbol: Verdict,
    /// Local symbols at infinity, 2 and the primes dividing the arguments.
    pub entries: Vec<(Place, i32)>,
    pub arguments: Option<SymbolArguments>,
}

impl ObstructionReport {
    pub fn failing_places(&self) -> Vec<&Place> {
        self.entries.iter().filter(|(_, s)| *s == -1).map(|(p, _)| p).collect()
    }
}
