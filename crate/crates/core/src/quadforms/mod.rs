//! Hilbert symbols, binary quadratic forms and conics.

pub mod forms;
pub mod hilbert;
pub mod report;

pub use forms::{
    conic_parametrize, conic_point, involution_c, represents_one, BinaryForm, ConicParam, Point,
};
pub use hilbert::{hilbert_global, hilbert_local, GlobalSymbol, Place};
pub use report::{ObstructionReport, SymbolArguments, Verdict};
