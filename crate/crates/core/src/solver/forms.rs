//! The auxiliary forms of the S3 and D4 constructions.

use crate::exactmath::{int, Rational};
use crate::quadforms::BinaryForm;

/// (a_*(r), b_*(r)): the cubic x^3 + a x + b transformed by x^2 + r x + 2a/3.
pub fn s3_star(a: &Rational, b: &Rational, r: &Rational) -> (Rational, Rational) {
    let sa = (int(3) * a * r * r - a * a + int(9) * b * r) / int(3);
    let sb = (int(-18) * a * a * r * r + int(27) * b * r * r * r - int(2) * a * a * a
        - int(27) * a * b * r
        - int(27) * b * b)
        / int(27);
    (sa, sb)
}

/// a_*(n, m) = (a^3 + 9ad^2) n^2 - (2a^2 + 12d^2) n m + a m^2.
pub fn astar(a: &Rational, d: &Rational) -> BinaryForm {
    BinaryForm::new(
        a * a * a + int(9) * a * d * d,
        a.clone(),
        -(int(2) * a * a + int(12) * d * d),
    )
}

/// d_*(n, m) = 3d^3 n^2 + a d n m - d m^2.
pub fn dstar(a: &Rational, d: &Rational) -> BinaryForm {
    BinaryForm::new(int(3) * d * d * d, -d.clone(), a * d)
}

pub fn combine(k1: &Rational, f1: &BinaryForm, k2: &Rational, f2: &BinaryForm) -> BinaryForm {
    BinaryForm::new(k1 * &f1.a + k2 * &f2.a, k1 * &f1.b + k2 * &f2.b, k1 * &f1.c + k2 * &f2.c)
}

/// a_* + 2 d_*.
pub fn d4_qprime(a: &Rational, d: &Rational) -> BinaryForm {
    combine(&int(1), &astar(a, d), &int(2), &dstar(a, d))
}

/// -1728 (a_* + 6 d_*).
pub fn d4_q(a: &Rational, d: &Rational) -> BinaryForm {
    combine(&int(-1728), &astar(a, d), &int(-10368), &dstar(a, d))
}
