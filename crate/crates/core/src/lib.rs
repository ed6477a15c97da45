//! Exact verification tools for motivic classes of classifying stacks of
//! `G_2` and spin groups.
//!
//! * [`lefschetz`]: canonical arithmetic in ℤ[L] localized at `L` and `L^n - 1`.
//! * [`motive`]: class formulas, stratification ledgers, and the spin tower.
//! * [`clifford`]: the Clifford algebra, Pin/Spin groups and the groups `Δ_n`.
//! * [`finite`]: brute-force orbit and point counts over small prime fields.
//! * [`dsl`]: a parser and evaluator for class expressions.
//! * [`suites`]: the named verification suites.

pub mod clifford;
pub mod dsl;
pub mod finite;
pub mod lefschetz;
pub mod motive;
pub mod report;
pub mod suites;
