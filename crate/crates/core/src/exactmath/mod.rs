//! Exact arithmetic: rationals, integer factoring, polynomials over Q and
//! over polynomial rings, resultants, rational roots and small factorization.

pub mod integer;
pub mod mpoly;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod roots;

pub use integer::{squarefree_part, SquarefreeClass};
pub use mpoly::MPoly;
pub use poly::{Poly, UniPoly};
pub use rational::{frac, int, is_cube, is_square, same_square_class, Rational};
pub use resultant::{discriminant, eliminate, resultant, tschirnhaus};
pub use ring::Ring;
pub use roots::{factor_small, rational_roots, Factorization};
