//! Labels of the five Galois groups of a quartic with discriminant -3 mod
//! squares.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseLabel {
    C2,
    C2xC2,
    S3,
    D4,
    S4,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 5] =
        [CaseLabel::C2, CaseLabel::C2xC2, CaseLabel::S3, CaseLabel::D4, CaseLabel::S4];

    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::C2 => "C2",
            CaseLabel::C2xC2 => "C2xC2",
            CaseLabel::S3 => "S3",
            CaseLabel::D4 => "D4",
            CaseLabel::S4 => "S4",
        }
    }

    /// Index i of the subgroup G_i.
    pub fn index(&self) -> usize {
        *self as usize
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CaseLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s) || (s == "C2^2" && *c == CaseLabel::C2xC2))
            .ok_or_else(|| format!("unknown case `{s}` (expected C2, C2xC2, S3, D4 or S4)"))
    }
}
