//! Resultants by the subresultant pseudo-remainder sequence, and the
//! discriminants and Tschirnhaus transforms built on them.

use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::poly::{Poly, UniPoly};
use super::rational::{sign_power, Rational};
use super::ring::Ring;

/// Resultant of two polynomials over an integral domain.
///
/// Intermediate divisions are exact, which keeps coefficient growth
/// polynomial even when coefficients are themselves polynomials.
pub fn resultant<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> R {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            negate = true;
        }
    }
    if db == 0 {
        let r = b.lc().power(da as u32);
        return if negate { r.negate() } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        let divisor = g.times(&h.power(delta as u32));
        a = b;
        b = r.map(|c| c.exact_div(&divisor).expect("subresultant division is exact"));
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.power(delta as u32)
                .exact_div(&h.power(delta as u32 - 1))
                .expect("subresultant division is exact")
        };
        let Some(new_db) = b.degree() else {
            return R::zero();
        };
        da = a.deg();
        db = new_db;
        if db == 0 {
            let num = b.lc().power(da as u32);
            let res = if da == 0 {
                num.times(&h)
            } else {
                num.exact_div(&h.power(da as u32 - 1)).expect("subresultant division is exact")
            };
            return if negate { res.negate() } else { res };
        }
    }
}

/// Eliminates variable `v` from two multivariate polynomials.
pub fn eliminate(f: &MPoly, g: &MPoly, v: usize) -> MPoly {
    resultant(&f.to_poly_in(v), &g.to_poly_in(v))
}

/// Discriminant with the normalization `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &UniPoly) -> Rational {
    let n = f.deg();
    if n < 1 {
        return Rational::zero();
    }
    if n == 1 {
        return Rational::one();
    }
    let r = resultant(f, &f.derivative());
    sign_power(n * (n - 1) / 2) * r / f.lc()
}

/// Monic polynomial whose roots are `t(alpha)` for the roots `alpha` of `f`,
/// computed as `Res_y(f(y), x - t(y))`.
pub fn tschirnhaus(f: &UniPoly, t: &UniPoly) -> UniPoly {
    let fy: Poly<UniPoly> = f.map(|c| UniPoly::constant(c.clone()));
    let mut ty: Poly<UniPoly> = t.map(|c| UniPoly::constant(-c.clone()));
    // x - t(y): add x to the y^0 coefficient
    let c0 = &ty.coeff(0) + &UniPoly::x();
    let mut cs: Vec<UniPoly> = ty.coeffs().to_vec();
    if cs.is_empty() {
        cs.push(c0);
    } else {
        cs[0] = c0;
    }
    ty = Poly::new(cs);
    resultant(&fy, &ty).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::integer::squarefree_part;
    use crate::exactmath::rational::{int, is_square};

    /// Sylvester-matrix determinant by fraction-free elimination: an
    /// independent route to the resultant over Q.
    fn sylvester_resultant(a: &UniPoly, b: &UniPoly) -> Rational {
        let (m, n) = (a.deg(), b.deg());
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for i in 0..n {
            for j in 0..=m {
                mat[i][i + j] = a.coeff(m - j);
            }
        }
        for i in 0..m {
            for j in 0..=n {
                mat[n + i][i + j] = b.coeff(n - j);
            }
        }
        let mut det = Rational::one();
        for c in 0..size {
            let Some(p) = (c..size).find(|&r| !mat[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                mat.swap(p, c);
                det = -det;
            }
            det *= mat[c][c].clone();
            for r in c + 1..size {
                let f = &mat[r][c] / &mat[c][c];
                for k in c..size {
                    let v = &f * &mat[c][k];
                    mat[r][k] -= v;
                }
            }
        }
        det
    }

    #[test]
    fn small_resultants() {
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[-3, 1]);
        assert_eq!(resultant(&a, &b), int(7));
        let c = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(resultant(&c, &c), int(0));
    }

    #[test]
    fn agrees_with_sylvester_determinant() {
        let polys = [
            UniPoly::from_ints(&[1, -3, 0, 2, 5]),
            UniPoly::from_ints(&[7, 1, 4]),
            UniPoly::from_ints(&[-1, 0, 0, 3]),
            UniPoly::from_ints(&[2, 9, -4, 1, 0, 1]),
            UniPoly::from_ints(&[3, 1]),
        ];
        for a in &polys {
            for b in &polys {
                assert_eq!(resultant(a, b), sylvester_resultant(a, b), "{a} / {b}");
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&UniPoly::from_ints(&[2, 0, 1])), int(-8));
        // -4p^3 - 27q^2 for x^3 + 96x + 128
        let oracle = int(-4) * int(96).pow(3) - int(27) * int(128).pow(2);
        assert_eq!(oracle, int(-3) * int(1152).pow(2));
        assert_eq!(discriminant(&UniPoly::from_ints(&[128, 96, 0, 1])), oracle);
        let d = discriminant(&UniPoly::from_ints(&[0, 12, 0, 0, 3]));
        assert_eq!(squarefree_part(&d, 1000).unwrap().0, (-3).into());
    }

    #[test]
    fn eliminate_s3_parametrization_sign() {
        // Res_t(A(t) - x, B(t) - y), A = -3(t+1), B = (t+1)(t+2), variables t=0, x=1, y=2
        let t = MPoly::var(0);
        let x = MPoly::var(1);
        let y = MPoly::var(2);
        let one = MPoly::int(1);
        let a = &(&MPoly::int(-3) * &(&t + &one)) - &x;
        let b = &(&(&t + &one) * &(&t + &MPoly::int(2))) - &y;
        let r = eliminate(&a, &b, 0);
        let target = &(&x.pow(2) - &(&MPoly::int(3) * &x)) - &(&MPoly::int(9) * &y);
        let c = r.exact_div(&target).expect("resultant is a multiple of x^2 - 3x - 9y");
        assert!(c.to_unipoly(0).is_some_and(|p| p.deg() == 0 && !p.is_zero()));
        // and not of the other sign
        let wrong = &(&x.pow(2) - &(&MPoly::int(3) * &x)) + &(&MPoly::int(9) * &y);
        assert!(r.exact_div(&wrong).is_none());
    }

    #[test]
    fn tschirnhaus_examples() {
        let f = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(tschirnhaus(&f, &UniPoly::from_ints(&[1, 1])), UniPoly::from_ints(&[2, -2, 1]));
        let g = UniPoly::from_ints(&[2, 0, 0, 1]);
        assert_eq!(tschirnhaus(&g, &UniPoly::from_ints(&[0, 0, 1])), UniPoly::from_ints(&[-4, 0, 0, 1]));
        // y = (2/3) a n + r n y + n y^2 with a = 0, r = n = 1
        let f3 = tschirnhaus(&g, &UniPoly::from_ints(&[0, 1, 1]));
        assert_eq!(f3, UniPoly::from_ints(&[-2, 6, 0, 1]));
    }

    #[test]
    fn discriminant_of_product_mod_squares() {
        let f = UniPoly::from_ints(&[1, 1, 0, 2]);
        let g = UniPoly::from_ints(&[-5, 3, 1]);
        let ratio = discriminant(&(&f * &g)) / (discriminant(&f) * discriminant(&g));
        assert!(is_square(&ratio).is_some());
    }
}
