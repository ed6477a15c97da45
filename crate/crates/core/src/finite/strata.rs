//! The stratification of `V ⊕ V` used for `B(U ⋊ μ_2)`.
//!
//! `A_1 = {(a, b, λ)}`, `A_2 = {(a, λ, 0)}`, `A_3 = {(λ, 0, 0)}` and
//! `B_1 = {(γ, a', b')}`, `B_2 = {(0, γ, a')}`, `B_3 = {(0, 0, γ)}` with
//! `λ, γ ≠ 0`. The strata are
//!
//! | stratum | points |
//! |---|---|
//! | S1 | `A_1×B_3 ∪ A_3×B_1` |
//! | S2 | `A_1×B_2 ∪ A_2×B_1` |
//! | S3 | `A_2×B_3 ∪ A_3×B_2` |
//! | S4 | `(V∖0)×0 ∪ 0×(V∖0)` |
//! | S5, S8 | `A_3×B_3` off and on `Δ_3 = {λ = γ}` |
//! | S6, S9 | `A_2×B_2` off and on `Δ_2 = {λ = -γ}` |
//! | S7, S10 | `A_1×B_1` off and on `Δ_1 = {λ = γ}` |
//!
//! On `A_2×B_2` the swap `(B, -1)` sends `(λ, γ)` to `(-γ, -λ)`, so its
//! fixed diagonal is `λ = -γ`; on the other two it sends `(λ, γ)` to
//! `(γ, λ)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::report::Check;

use super::field::Fp;
use super::model::{decode, orbits_of, stabilizer_from_orbit, stabilizer_order, FqActionModel};
use super::models::{b_matrix, u_mu2_model};
use super::FiniteError;

/// `(i, λ)` with `v ∈ A_i`, `λ` its last nonzero coordinate.
pub fn a_index(v: &[u32]) -> Option<(u8, u32)> {
    match (v[0], v[1], v[2]) {
        (_, _, l) if l != 0 => Some((1, l)),
        (_, l, 0) if l != 0 => Some((2, l)),
        (l, 0, 0) if l != 0 => Some((3, l)),
        _ => None,
    }
}

/// `(j, γ)` with `w ∈ B_j`, `γ` its first nonzero coordinate.
pub fn b_index(w: &[u32]) -> Option<(u8, u32)> {
    match (w[0], w[1], w[2]) {
        (g, _, _) if g != 0 => Some((1, g)),
        (0, g, _) if g != 0 => Some((2, g)),
        (0, 0, g) if g != 0 => Some((3, g)),
        _ => None,
    }
}

/// The stratum `1..=10` of a nonzero point of `V ⊕ V`, `None` at the origin.
pub fn stratum(f: Fp, x: &[u32]) -> Option<u8> {
    let (v, w) = x.split_at(3);
    match (a_index(v), b_index(w)) {
        (None, None) => None,
        (None, _) | (_, None) => Some(4),
        (Some((i, l)), Some((j, g))) => Some(match (i.min(j), i.max(j), i == j) {
            (1, 3, false) => 1,
            (1, 2, false) => 2,
            (2, 3, false) => 3,
            (3, 3, true) => if l == g { 8 } else { 5 },
            (2, 2, true) => if l == f.neg(g) { 9 } else { 6 },
            (1, 1, true) => if l == g { 10 } else { 7 },
            _ => unreachable!("indices lie in 1..=3"),
        }),
    }
}

/// Orbit structure predicted by the quotient description of a stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumPrediction {
    pub id: u8,
    pub points: u64,
    pub orbits: u64,
    /// Multiset of stabilizer orders over the orbits.
    pub stabilizers: BTreeMap<u64, u64>,
}

pub fn predictions(q: u64) -> Vec<StratumPrediction> {
    let q1 = q - 1;
    let q2 = q - 2;
    let uniform = |id, points, orbits, stab| StratumPrediction { id, points, orbits, stabilizers: BTreeMap::from([(stab, orbits)]) };
    vec![
        // G_m² × BG_a
        uniform(1, 2 * q * q * q1 * q1, q1 * q1, q),
        // G_m² × G_a × BG_a
        uniform(2, 2 * q.pow(3) * q1 * q1, q * q1 * q1, q),
        // G_m² × BG_a²
        uniform(3, 2 * q * q1 * q1, q1 * q1, q * q),
        // [(V∖0)/U]: on each of A_3, A_2, A_1 the U-orbits are indexed by λ
        StratumPrediction {
            id: 4,
            points: 2 * (q.pow(3) - 1),
            orbits: 3 * q1,
            stabilizers: BTreeMap::from([(q, q1), (q * q, q1), (q.pow(3), q1)]),
        },
        // μ_2 swaps (λ, γ) freely off the diagonal
        uniform(5, q1 * q2, q1 * q2 / 2, q.pow(3)),
        uniform(6, q * q * q1 * q2, q1 * q2 / 2, q),
        uniform(7, q.pow(4) * q1 * q2, q * q1 * q2 / 2, 1),
        uniform(8, q1, q1, 2 * q.pow(3)),
        uniform(9, q * q * q1, q1, 2 * q),
        uniform(10, q.pow(4) * q1, q * q1, 2),
    ]
}

fn fmt_multiset(m: &BTreeMap<u64, u64>) -> String {
    let parts: Vec<String> = m.iter().map(|(s, c)| format!("{s}x{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Partition, invariance and per-stratum orbit counts for `U ⋊ μ_2` on
/// `(V ⊕ V)(F_q)`.
pub fn verify_strata_partition(f: Fp) -> Result<Vec<Check>, FiniteError> {
    let q = f.q();
    let model = u_mu2_model(f);
    let mut checks = Vec::new();

    // A_i and B_j partition V∖{0}.
    let mut a_counts = [0u64; 3];
    let mut b_counts = [0u64; 3];
    let mut swap_ok = true;
    let b = b_matrix(f);
    for x in 1..q.pow(3) as u32 {
        let v = decode(f, 3, x);
        let (i, _) = a_index(&v).expect("nonzero vector lies in some A_i");
        let (j, _) = b_index(&v).expect("nonzero vector lies in some B_j");
        a_counts[i as usize - 1] += 1;
        b_counts[j as usize - 1] += 1;
        let bv = b.apply(f, &v);
        swap_ok &= b_index(&bv).map(|t| t.0) == Some(i) && a_index(&bv).map(|t| t.0) == Some(j);
    }
    let expected = [q * q * (q - 1), q * (q - 1), q - 1];
    checks.push(Check::new(
        "finite.strata.a_partition",
        a_counts == expected && a_counts.iter().sum::<u64>() == q.pow(3) - 1,
        "|A_1|, |A_2|, |A_3| cover V minus the origin",
        format!("{a_counts:?}"),
        format!("{expected:?}"),
    ));
    checks.push(Check::new(
        "finite.strata.b_partition",
        b_counts == expected,
        "|B_1|, |B_2|, |B_3| cover V minus the origin",
        format!("{b_counts:?}"),
        format!("{expected:?}"),
    ));
    checks.push(Check::new(
        "finite.strata.swap_exchanges",
        swap_ok,
        "B maps A_i onto B_i and B_i onto A_i",
        swap_ok,
        true,
    ));

    // Invariance under every generator, and stratum sizes.
    let total = model.carrier_size() as u32;
    let gens = model.generators();
    let mut sizes: BTreeMap<u8, u64> = BTreeMap::new();
    let mut moved_out: BTreeSet<u8> = BTreeSet::new();
    for x in 1..total {
        let s = stratum(f, &model.decode(x)).expect("only the origin has no stratum");
        *sizes.entry(s).or_default() += 1;
        for g in &gens {
            if stratum(f, &model.decode(model.apply(g, x))) != Some(s) {
                moved_out.insert(s);
            }
        }
    }

    // Orbits and stabilizers.
    let mut orbit_data: BTreeMap<u8, BTreeMap<u64, u64>> = BTreeMap::new();
    let mut stab_of = vec![0u64; total as usize];
    for orbit in orbits_of(&model, 1..total) {
        let s = stratum(f, &model.decode(orbit[0])).expect("nonzero");
        let stab = stabilizer_from_orbit(model.group_order(), orbit.len())?;
        *orbit_data.entry(s).or_default().entry(stab).or_default() += 1;
        for &x in &orbit {
            stab_of[x as usize] = stab;
        }
    }

    let mut sum = 0;
    for p in predictions(q) {
        let id = p.id;
        let count = sizes.get(&id).copied().unwrap_or(0);
        sum += count;
        checks.push(Check::new(
            format!("finite.strata.s{id:02}.invariant"),
            !moved_out.contains(&id),
            format!("S{id} is invariant under U x| mu2"),
            !moved_out.contains(&id),
            true,
        ));
        checks.push(Check::new(format!("finite.strata.s{id:02}.points"), count == p.points, format!("|S{id}(F_q)|"), count, p.points));
        let stabs = orbit_data.get(&id).cloned().unwrap_or_default();
        let orbits: u64 = stabs.values().sum();
        checks.push(Check::new(format!("finite.strata.s{id:02}.orbits"), orbits == p.orbits, format!("orbits in S{id}"), orbits, p.orbits));
        checks.push(Check::new(
            format!("finite.strata.s{id:02}.stabilizers"),
            stabs == p.stabilizers,
            format!("stabilizer orders in S{id} (order x number of orbits)"),
            fmt_multiset(&stabs),
            fmt_multiset(&p.stabilizers),
        ));
    }
    checks.push(Check::new(
        "finite.strata.total",
        sum + 1 == q.pow(6),
        "strata plus the origin exhaust (V+V)(F_q)",
        sum + 1,
        q.pow(6),
    ));

    // Direct filtering at one representative per stratum.
    let mut reps: BTreeMap<u8, u32> = BTreeMap::new();
    for x in 1..total {
        reps.entry(stratum(f, &model.decode(x)).expect("nonzero")).or_insert(x);
    }
    let mut direct_ok = true;
    let mut detail = Vec::new();
    for (s, x) in reps {
        let stab = stabilizer_order(&model, x);
        direct_ok &= stab.is_ok();
        detail.push(format!("S{s}:{}", stab.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string())));
    }
    checks.push(Check::new(
        "finite.strata.direct_filter",
        direct_ok,
        "orbit-stabilizer agrees with direct filtering at one point per stratum",
        detail.join(" "),
        "agreement",
    ));

    // The literal diagonal λ = γ inside A_2 × B_2, for comparison.
    let mut literal: BTreeMap<u64, u64> = BTreeMap::new();
    for x in 1..total {
        let p = model.decode(x);
        if let (Some((2, l)), Some((2, g))) = (a_index(&p[..3]), b_index(&p[3..])) {
            if l == g {
                *literal.entry(stab_of[x as usize]).or_default() += 1;
            }
        }
    }
    checks.push(Check::descriptive(
        "finite.strata.a2b2_literal_diagonal",
        "stabilizer orders on {lambda = gamma} in A_2 x B_2 (order x points)",
        fmt_multiset(&literal),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let f = Fp::new(5).unwrap();
        assert_eq!(stratum(f, &[0, 0, 0, 0, 0, 0]), None);
        assert_eq!(stratum(f, &[1, 0, 0, 0, 0, 0]), Some(4));
        assert_eq!(stratum(f, &[1, 0, 0, 0, 0, 1]), Some(8));
        assert_eq!(stratum(f, &[1, 0, 0, 0, 0, 2]), Some(5));
        assert_eq!(stratum(f, &[0, 1, 0, 0, 4, 0]), Some(9));
        assert_eq!(stratum(f, &[0, 1, 0, 0, 1, 0]), Some(6));
        assert_eq!(stratum(f, &[0, 0, 1, 1, 0, 0]), Some(10));
        assert_eq!(stratum(f, &[0, 0, 1, 0, 0, 1]), Some(1));
    }

    #[test]
    fn predictions_exhaust_the_space() {
        for q in [5u64, 13] {
            let total: u64 = predictions(q).iter().map(|p| p.points).sum();
            assert_eq!(total + 1, q.pow(6));
            for p in predictions(q) {
                let by_orbits: u64 = p.stabilizers.iter().map(|(s, c)| c * 2 * q.pow(3) / s).sum();
                assert_eq!(by_orbits, p.points, "S{}", p.id);
            }
        }
    }
}
