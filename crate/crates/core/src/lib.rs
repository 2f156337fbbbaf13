//! Galois embedding problems attached to quartics with discriminant -3 modulo
//! squares, and elliptic curves over Q whose 3-division polynomial realizes
//! them.

pub mod budget;
pub mod case;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod exactmath;
pub mod gl2f3;
pub mod json;
pub mod qexp;
pub mod quadforms;
pub mod quartic;
pub mod solver;

pub use budget::Budgets;
pub use error::{Error, Result};
