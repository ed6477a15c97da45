//! Class formulas, the stratification ledgers, and the spin-tower recursion.

mod classes;
mod expr;
mod ledger;
mod tower;

use thiserror::Error;

use crate::lefschetz::RingError;

pub use classes::{class_g2, class_gl, class_sl, class_spin, strat_equation};
pub use expr::{AtomTerm, MotiveExpr, MotiveTree};
pub use ledger::{b_g2_value, verify_g2_ledger, verify_spin78_ledger};
pub use tower::{
    all_ones, bg, bpin, bspin, leading_coeff_closed_form, leading_delta_coeff, solve_deltas, solve_deltas_with,
    substitute_deltas, RecursionKey, RecursionKind, Tower,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no value supplied for atoms {0:?}")]
    MissingAtom(Vec<u32>),
    #[error("inconsistent system at n = {n}: {detail}")]
    Inconsistent { n: u32, detail: String },
    #[error("product of two expressions that both contain BDelta atoms")]
    NonLinear,
    #[error(transparent)]
    Ring(#[from] RingError),
}
