//! Brute-force models over small prime fields: orbits and stabilizers of
//! the groups `SL_3 ⋊ μ_2`, `H`, `U ⋊ μ_2`, the strata used for
//! `B(U ⋊ μ_2)`, and point counts of class formulas.

mod claims;
mod field;
mod matrix;
mod model;
mod models;
mod strata;

use thiserror::Error;

pub use claims::{
    brute_force_orders, classcount_sanity, verify_action_laws, verify_c4_structure, verify_finite_suite,
    verify_q6_claims, SUPPORTED_Q,
};
pub use field::Fp;
pub use matrix::FqMatrix;
pub use model::{
    decode, encode, enumerate_group, orbit_bfs, orbits_of, random_element, stabilizer_from_orbit, stabilizer_order,
    FqActionModel, LinearElement, LinearModel, TrivialModel, DIRECT_FILTER_LIMIT,
};
pub use models::{g_model, g_mu2_model, h_model, h_mu2_model, h_on_v_plus_v, sl_order, u_mu2_model};
pub use strata::{a_index, b_index, predictions, stratum, verify_strata_partition, StratumPrediction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("{0} is not a prime below 2^15")]
    NotPrime(u64),
    #[error("q = {0} is not supported here")]
    UnsupportedField(u64),
    #[error("orbit of size {orbit} does not divide group order {order}")]
    NonDivisible { orbit: u64, order: u64 },
    #[error("orbit-stabilizer gives {orbit_stabilizer} but direct filtering gives {direct}")]
    StabilizerMismatch { orbit_stabilizer: u64, direct: u64 },
    #[error("generators reach {found} elements, expected {expected}")]
    GeneratorMismatch { expected: u64, found: u64 },
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u64),
}
