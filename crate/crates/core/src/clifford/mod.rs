//! The Clifford algebra of `q(x) = -Σ x_i²` over the Gaussian rationals,
//! Pin/Spin membership, the projection `ρ_n`, and the groups `Δ_n`.

mod algebra;
mod checks;
mod delta;
mod gaussian;
mod matrix;
mod pin;
mod quad;
mod sample;

use thiserror::Error;

pub use algebra::{blade_from_indices, blade_indices, blade_mul, grade, product, Blade, CliffordElement, MAX_DIM};
pub use checks::{
    delta_embed_spin, eta_center_check, f_map, phi_pin, verify_blade_associativity, verify_clifford_suite, verify_delta,
    verify_f_properties, verify_involutions, verify_phi_pin_embedding, verify_phi_w, verify_pin_and_rho, verify_relations,
};
pub use delta::{embed_into_spin, DeltaGroup, SignedBlade};
pub use gaussian::GaussRat;
pub use matrix::Matrix;
pub use pin::{is_orthogonal, is_pin, is_spin, rho};
pub use quad::{dot, phi_w_matrix, phi_w_template, QuadForm, QuadSpace};
pub use sample::{pin_sample, second_intersection, unit_vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("{0} is not in Pin_n")]
    NotPin(String),
    #[error("vector must be supported on indices 3..n")]
    BadSupport,
    #[error("could not sample a non-degenerate direction")]
    DegenerateDirection,
}
