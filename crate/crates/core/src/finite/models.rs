//! The concrete actions: `G = SL_3 ⋊ μ_2` on `V ⊕ V`, its stabilizers `H`
//! and `U ⋊ μ_2`, and their products with the scaling `μ_2`.
//!
//! `(A, 1)` acts by `(v, w) ↦ (Av, (Aᵀ)⁻¹w)` and `(id, -1)` by
//! `(v, w) ↦ (w, v)`, so every element is a 6×6 matrix. Scaling characters
//! are carried as sign bits: bit 0 is the `μ_2` of `G × μ_2`, bit 1 the
//! extra `μ_2` in `H × μ_2`.

use super::field::Fp;
use super::matrix::FqMatrix;
use super::model::{LinearElement, LinearModel};

/// `|SL_n(F_q)| = q^{n(n-1)/2} ∏_{i=2}^{n} (q^i - 1)`.
pub fn sl_order(n: u32, q: u64) -> u64 {
    q.pow(n * (n - 1) / 2) * (2..=n).map(|i| q.pow(i) - 1).product::<u64>()
}

/// `A ↦ diag(A, (Aᵀ)⁻¹)` for `A ∈ SL_3`.
pub fn embed_sl3(f: Fp, a: &FqMatrix) -> LinearElement {
    let it = a.inverse_transpose(f).expect("element of SL_3 is invertible");
    LinearElement { matrix: FqMatrix::block_diag(a, &it), signs: 0 }
}

pub fn swap() -> LinearElement {
    LinearElement { matrix: FqMatrix::half_swap(3), signs: 0 }
}

fn scaling(bit: u8) -> LinearElement {
    LinearElement { matrix: FqMatrix::identity(6), signs: 1 << bit }
}

/// The elementary matrices `I + E_ij`, `i ≠ j`, generating `SL_3(F_p)`.
fn sl3_generators(f: Fp) -> Vec<LinearElement> {
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                gens.push(embed_sl3(f, &FqMatrix::elementary(f, 3, i, j, 1)));
            }
        }
    }
    gens
}

/// `B: e_1, e_2, e_3 ↦ e_3, -e_2, e_1`.
pub fn b_matrix(f: Fp) -> FqMatrix {
    FqMatrix::from_rows(f, &[vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]])
}

/// `τ = (diag(-1, -1, 1), 1)` composed with the scaling `-1`, so that it
/// fixes `(e_1, e_1)`.
pub fn tau(f: Fp) -> LinearElement {
    let mut t = embed_sl3(f, &FqMatrix::diagonal(f, &[-1, -1, 1]));
    t.signs = 1;
    t
}

const ALL: [usize; 6] = [0, 1, 2, 3, 4, 5];
/// `W ⊕ W` with `W = ⟨e_2, e_3⟩`.
pub const W_PLUS_W: [usize; 4] = [1, 2, 4, 5];

fn model(name: &str, f: Fp, coords: &[usize], generators: Vec<LinearElement>, order: u64) -> LinearModel {
    LinearModel { name: name.into(), field: f, ambient: 6, coords: coords.to_vec(), generators, order }
}

/// `G = SL_3 ⋊ μ_2` on `V ⊕ V`.
pub fn g_model(f: Fp) -> LinearModel {
    let mut gens = sl3_generators(f);
    gens.push(swap());
    model("G", f, &ALL, gens, 2 * sl_order(3, f.q()))
}

/// `G × μ_2` on `V ⊕ V`, the second factor acting by scaling.
pub fn g_mu2_model(f: Fp) -> LinearModel {
    let mut m = g_model(f);
    m.name = "G x mu2".into();
    m.generators.push(scaling(0));
    m.order *= 2;
    m
}

fn h_generators(f: Fp) -> Vec<LinearElement> {
    vec![
        embed_sl3(f, &FqMatrix::elementary(f, 3, 1, 2, 1)),
        embed_sl3(f, &FqMatrix::elementary(f, 3, 2, 1, 1)),
        swap(),
        tau(f),
    ]
}

/// `H = SL_2 ⋊ (μ_2 × μ_2)`, the stabilizer of `(e_1, e_1)` in `G × μ_2`,
/// acting on all of `V ⊕ V`.
pub fn h_on_v_plus_v(f: Fp) -> LinearModel {
    model("H on V+V", f, &ALL, h_generators(f), 4 * sl_order(2, f.q()))
}

/// `H` acting on `W ⊕ W`.
pub fn h_model(f: Fp) -> LinearModel {
    model("H", f, &W_PLUS_W, h_generators(f), 4 * sl_order(2, f.q()))
}

/// `H × μ_2` acting on `W ⊕ W`, the new factor by scaling.
pub fn h_mu2_model(f: Fp) -> LinearModel {
    let mut gens = h_generators(f);
    gens.push(scaling(1));
    model("H x mu2", f, &W_PLUS_W, gens, 8 * sl_order(2, f.q()))
}

/// `U ⋊ μ_2` on `V ⊕ V`: upper unitriangular `U` and `(B, -1)`.
pub fn u_mu2_model(f: Fp) -> LinearModel {
    let mut gens: Vec<LinearElement> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| embed_sl3(f, &FqMatrix::elementary(f, 3, i, j, 1)))
        .collect();
    let b = embed_sl3(f, &b_matrix(f));
    gens.push(LinearElement { matrix: b.matrix.mul(f, &FqMatrix::half_swap(3)), signs: 0 });
    model("U x| mu2", f, &ALL, gens, 2 * f.q().pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::model::{enumerate_group, FqActionModel};

    #[test]
    fn orders() {
        assert_eq!(sl_order(2, 5), 120);
        assert_eq!(sl_order(3, 5), 372_000);
        assert_eq!(sl_order(2, 3), 24);
    }

    #[test]
    fn small_groups_are_generated() {
        let f = Fp::new(5).unwrap();
        assert_eq!(enumerate_group(&u_mu2_model(f)).unwrap().len(), 250);
        assert_eq!(enumerate_group(&h_model(f)).unwrap().len(), 480);
        assert_eq!(enumerate_group(&h_mu2_model(f)).unwrap().len(), 960);
    }

    #[test]
    fn b_swap_matches_the_explicit_formula() {
        // ((a,b,c),(c',d,e)) ↦ ((e,-d,c'),(c,-b,a))
        let f = Fp::new(13).unwrap();
        let m = u_mu2_model(f);
        let g = m.generators.last().unwrap().clone();
        let x = m.point(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(m.apply(&g, x), m.point(&[6, -5, 4, 3, -2, 1]));
    }
}
