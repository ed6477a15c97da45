//! Orbit and stabilizer claims for `G`, `H` and `H × μ_2` over `F_q`, and
//! point counts of the class formulas.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::motive::{class_gl, class_sl, class_spin};
use crate::report::{Check, CheckReport};

use super::field::Fp;
use super::model::{
    enumerate_group, orbit_bfs, orbits_of, random_element, stabilizer_from_orbit, stabilizer_order, FqActionModel, LinearModel,
    TrivialModel,
};
use super::models::{g_model, g_mu2_model, h_model, h_mu2_model, h_on_v_plus_v, sl_order, u_mu2_model};
use super::strata::verify_strata_partition;
use super::FiniteError;

/// Fields on which the orbit claims are checked.
pub const SUPPORTED_Q: [u64; 2] = [5, 13];

fn supported_field(q: u64) -> Result<Fp, FiniteError> {
    if !SUPPORTED_Q.contains(&q) {
        return Err(FiniteError::UnsupportedField(q));
    }
    Fp::new(q)
}

/// `v·w` for a point `(v, w)` of a space `W ⊕ W`.
fn pairing(f: Fp, x: &[u32]) -> u32 {
    let (v, w) = x.split_at(x.len() / 2);
    v.iter().zip(w).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn orbit_sizes(orbits: &[Vec<u32>]) -> String {
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for o in orbits {
        *sizes.entry(o.len()).or_default() += 1;
    }
    if orbits.is_empty() {
        return "no orbits (empty set)".to_string();
    }
    let parts: Vec<String> = sizes.iter().map(|(s, c)| format!("{c} of size {s}")).collect();
    format!("{} orbits: {}", orbits.len(), parts.join(", "))
}

/// Transitivity on `Q_6`, the stabilizer `H` of `(e_1, e_1)`, the orbit and
/// stabilizer of `D_6`, and the stabilizer `U ⋊ μ_2` of `(e_1, e_3)`.
pub fn verify_q6_claims(q: u64) -> Result<Vec<Check>, FiniteError> {
    let f = supported_field(q)?;
    let mut checks = Vec::new();
    let gm = g_mu2_model(f);
    let g = g_model(f);
    let sl2 = sl_order(2, q);

    let all: Vec<u32> = (0..gm.carrier_size() as u32).collect();
    let q6: BTreeSet<u32> = all.iter().copied().filter(|&x| pairing(f, &gm.decode(x)) == 1).collect();
    let q6_expected = (q.pow(3) - 1) * q * q;
    checks.push(Check::new("finite.q6.points", q6.len() as u64 == q6_expected, "|Q_6(F_q)| = (q^3-1) q^2", q6.len(), q6_expected));

    let base = gm.point(&[1, 0, 0, 1, 0, 0]);
    let orbit: BTreeSet<u32> = orbit_bfs(&gm, base).into_iter().collect();
    checks.push(Check::new(
        "finite.q6.transitive",
        orbit == q6,
        "G x mu2 acts transitively on Q_6 from (e1, e1)",
        orbit.len(),
        q6.len(),
    ));
    let stab = stabilizer_from_orbit(gm.group_order(), orbit.len())?;
    checks.push(Check::new(
        "finite.q6.stabilizer",
        stab == 4 * sl2,
        "stabilizer of (e1, e1) has order |SL_2| * 4",
        stab,
        4 * sl2,
    ));

    let h = h_on_v_plus_v(f);
    let fixes = h.generators().iter().all(|x| h.apply(x, base) == base);
    checks.push(Check::new("finite.h.fixes_base", fixes, "generators of H fix (e1, e1)", fixes, true));
    let h_stab = stabilizer_order(&h, base)?;
    checks.push(Check::new(
        "finite.h.order",
        h_stab == h.group_order() && stab == h.group_order(),
        "H is generated by SL_2, the swap and tau, and equals the stabilizer",
        h_stab,
        stab,
    ));

    let d6: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&x| {
            let p = g.decode(x);
            is_zero(&p[..3]) != is_zero(&p[3..])
        })
        .collect();
    let d6_orbit = orbit_bfs(&g, g.point(&[1, 0, 0, 0, 0, 0]));
    checks.push(Check::new(
        "finite.d6.transitive",
        d6_orbit.len() == d6.len() && d6.len() as u64 == 2 * (q.pow(3) - 1),
        "G acts transitively on D_6",
        d6_orbit.len(),
        d6.len(),
    ));
    let d6_stab = stabilizer_from_orbit(g.group_order(), d6_orbit.len())?;
    checks.push(Check::new(
        "finite.d6.stabilizer",
        d6_stab == q * q * sl2,
        "stabilizer of (e1, 0) has order q^2 |SL_2|",
        d6_stab,
        q * q * sl2,
    ));

    let c6: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&x| {
            let p = g.decode(x);
            !is_zero(&p[..3]) && !is_zero(&p[3..]) && pairing(f, &p) == 0
        })
        .collect();
    let c6_orbits = orbits_of(&g, c6.iter().copied());
    checks.push(Check::descriptive("finite.c6.orbits", "orbits of G on C_6", orbit_sizes(&c6_orbits)));
    let e1e3 = g.point(&[1, 0, 0, 0, 0, 1]);
    let u = u_mu2_model(f);
    let u_fixes = u.generators().iter().all(|x| u.apply(x, e1e3) == e1e3);
    let c6_stab = stabilizer_from_orbit(g.group_order(), orbit_bfs(&g, e1e3).len())?;
    checks.push(Check::new(
        "finite.c6.stabilizer",
        u_fixes && c6_stab == u.group_order(),
        "stabilizer of (e1, e3) in G is U x| mu2 of order 2q^3",
        c6_stab,
        u.group_order(),
    ));
    Ok(checks)
}

/// `λ` with `w = λ(-b, a)` for a point `((a, b), w)` of `C_4`.
fn c4_lambda(f: Fp, x: &[u32]) -> u32 {
    let (a, b) = (x[0], x[1]);
    if a != 0 {
        f.div(x[3], a).expect("a is nonzero")
    } else {
        f.div(f.neg(x[2]), b).expect("v is nonzero")
    }
}

/// Name a group of order at most 8 from its element orders and whether it
/// is abelian; larger groups are described by their order profile.
fn group_type<M: FqActionModel>(model: &M, elements: &[M::Element]) -> String {
    let id = model.identity();
    let order_of = |g: &M::Element| {
        let mut x = g.clone();
        let mut k = 1;
        while x != id {
            x = model.compose(g, &x);
            k += 1;
        }
        k
    };
    let mut profile: BTreeMap<usize, usize> = BTreeMap::new();
    for g in elements {
        *profile.entry(order_of(g)).or_default() += 1;
    }
    let abelian = elements
        .iter()
        .all(|g| elements.iter().all(|h| model.compose(g, h) == model.compose(h, g)));
    let involutions = profile.get(&2).copied().unwrap_or(0);
    let name = match (elements.len(), abelian, involutions) {
        (8, true, 1) => "Z/8",
        (8, true, 3) => "Z/4 x Z/2",
        (8, true, 7) => "(Z/2)^3",
        (8, false, 5) => "D_4",
        (8, false, 1) => "Q_8",
        _ => "unnamed",
    };
    let orders: Vec<String> = profile.iter().map(|(o, c)| format!("{c} of order {o}")).collect();
    format!("{name} ({})", orders.join(", "))
}

/// The `H`-action on `W ⊕ W`: `Q_4`, `D_4` and the two pieces of `C_4`.
pub fn verify_c4_structure(q: u64) -> Result<Vec<Check>, FiniteError> {
    let f = supported_field(q)?;
    let mut checks = Vec::new();
    let h = h_model(f);
    let hm = h_mu2_model(f);
    let points: Vec<Vec<u32>> = (0..h.carrier_size() as u32).map(|x| h.decode(x)).collect();

    let c4: BTreeSet<u32> = (0..points.len() as u32)
        .filter(|&x| {
            let p = &points[x as usize];
            !is_zero(&p[..2]) && !is_zero(&p[2..]) && pairing(f, p) == 0
        })
        .collect();
    let mut image = BTreeSet::new();
    let mut injective = true;
    for a in 0..f.p() {
        for b in 0..f.p() {
            if a == 0 && b == 0 {
                continue;
            }
            for l in 1..f.p() {
                let x = h.encode(&[a, b, f.mul(l, f.neg(b)), f.mul(l, a)]);
                injective &= image.insert(x);
            }
        }
    }
    let c4_expected = (q * q - 1) * (q - 1);
    checks.push(Check::new(
        "finite.c4.parametrization",
        injective && image == c4 && c4.len() as u64 == c4_expected,
        "((a,b), lambda) -> ((a,b), lambda(-b,a)) is a bijection onto C_4",
        c4.len(),
        c4_expected,
    ));

    // λ ↦ λ under SL_2, -1/λ under the swap, -λ under τ.
    let gens = h.generators();
    let mut lambda_ok = true;
    for &x in &c4 {
        let l = c4_lambda(f, &points[x as usize]);
        let expected = [l, l, f.neg(f.inv(l).expect("nonzero")), f.neg(l)];
        for (g, e) in gens.iter().zip(expected) {
            lambda_ok &= c4_lambda(f, &h.decode(h.apply(g, x))) == e;
        }
    }
    checks.push(Check::new(
        "finite.c4.lambda_action",
        lambda_ok,
        "SL_2 fixes lambda, the swap sends it to -1/lambda, tau to -lambda",
        lambda_ok,
        true,
    ));

    let q4: BTreeSet<u32> = (0..points.len() as u32).filter(|&x| pairing(f, &points[x as usize]) == 1).collect();
    let q4_base = hm.point(&[1, 0, 1, 0]);
    let q4_orbit: BTreeSet<u32> = orbit_bfs(&hm, q4_base).into_iter().collect();
    checks.push(Check::new(
        "finite.q4.transitive",
        q4_orbit == q4,
        "H x mu2 acts transitively on Q_4",
        q4_orbit.len(),
        q4.len(),
    ));
    let q4_stab = stabilizer_order(&hm, q4_base)?;
    checks.push(Check::new("finite.q4.stabilizer", q4_stab == 8, "stabilizer in H x mu2 of a point of Q_4", q4_stab, 8));
    let q4_type = match enumerate_group(&hm) {
        Ok(elements) => {
            let stab: Vec<_> = elements.into_iter().filter(|g| hm.apply(g, q4_base) == q4_base).collect();
            group_type(&hm, &stab)
        }
        Err(e) => format!("not enumerated: {e}"),
    };
    checks.push(Check::descriptive("finite.q4.stabilizer_type", "isomorphism type of the Q_4 stabilizer", q4_type));

    let d4_count = 2 * (q * q - 1);
    let d4_base = h.point(&[1, 0, 0, 0]);
    let d4_orbit = orbit_bfs(&h, d4_base);
    let d4_stab = stabilizer_order(&h, d4_base)?;
    checks.push(Check::new(
        "finite.d4.transitive",
        d4_orbit.len() as u64 == d4_count && d4_stab == 2 * q,
        "H is transitive on D_4 with stabilizer of order 2q",
        format!("orbit {}, stabilizer {}", d4_orbit.len(), d4_stab),
        format!("orbit {}, stabilizer {}", d4_count, 2 * q),
    ));

    let quartic = |l: u32| f.pow(l, 4) == 1;
    let c4_1: Vec<u32> = c4.iter().copied().filter(|&x| quartic(c4_lambda(f, &points[x as usize]))).collect();
    let c4_1_orbits = orbits_of(&h, c4_1.iter().copied());
    let mut stabs = Vec::new();
    for o in &c4_1_orbits {
        stabs.push(stabilizer_order(&h, o[0])?);
    }
    checks.push(Check::new(
        "finite.c4_1.orbits",
        c4_1_orbits.len() == 2 && stabs.iter().all(|&s| s == 2 * q),
        "C_4^1 is two orbits, each with stabilizer of order 2q",
        format!("{} orbits, stabilizers {stabs:?}", c4_1_orbits.len()),
        format!("2 orbits, stabilizers [{0}, {0}]", 2 * q),
    ));
    let c4_2: Vec<u32> = c4.iter().copied().filter(|&x| !quartic(c4_lambda(f, &points[x as usize]))).collect();
    let c4_2_orbits = orbits_of(&h, c4_2.iter().copied());
    checks.push(Check::descriptive("finite.c4_2.orbits", "orbits of H on C_4^2", orbit_sizes(&c4_2_orbits)));
    Ok(checks)
}

/// Orbit sizes divide the group order and `apply(gh, x) = apply(g, apply(h, x))`
/// on sampled triples, for each model.
pub fn verify_action_laws(q: u64, seed: u64, samples: usize) -> Result<Vec<Check>, FiniteError> {
    let f = supported_field(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let models: Vec<(&str, LinearModel)> = vec![
        ("g", g_model(f)),
        ("g_mu2", g_mu2_model(f)),
        ("h", h_model(f)),
        ("h_mu2", h_mu2_model(f)),
        ("u_mu2", u_mu2_model(f)),
    ];
    let mut checks = Vec::new();
    for (key, m) in models {
        let mut ok = true;
        let mut divides = true;
        for _ in 0..samples {
            let a = random_element(&m, &mut rng, 12);
            let b = random_element(&m, &mut rng, 12);
            let x = rand::Rng::gen_range(&mut rng, 0..m.carrier_size() as u32);
            ok &= m.apply(&m.compose(&a, &b), x) == m.apply(&a, m.apply(&b, x));
        }
        for x in [1u32, m.carrier_size() as u32 - 1] {
            divides &= stabilizer_from_orbit(m.group_order(), orbit_bfs(&m, x).len()).is_ok();
        }
        checks.push(Check::new(format!("finite.action_law.{key}"), ok, format!("{}: apply(gh, x) = apply(g, apply(h, x))", m.name), ok, true));
        checks.push(Check::new(format!("finite.orbit_divides.{key}"), divides, format!("{}: orbit sizes divide the group order", m.name), divides, true));
    }
    let t = TrivialModel { field: f, dim: 6 };
    let single = orbit_bfs(&t, 17) == vec![17] && stabilizer_order(&t, 17)? == 1;
    checks.push(Check::new("finite.trivial", single, "trivial group: singleton orbit, stabilizer 1", single, true));
    Ok(checks)
}

/// Brute-force orders of `GL_2`, `SL_2`, `SL_3` over `F_q`.
pub fn brute_force_orders(q: u64) -> Result<(u64, u64, u64), FiniteError> {
    let f = Fp::new(q)?;
    let p = f.p();
    let (mut gl2, mut sl2) = (0u64, 0u64);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = f.sub(f.mul(a, d), f.mul(b, c));
                    gl2 += (det != 0) as u64;
                    sl2 += (det == 1) as u64;
                }
            }
        }
    }
    // det = a(ei - fh) - b(di - fg) + c(dh - eg), looping over the first two
    // rows and counting third rows with the right determinant.
    let mut sl3 = 0u64;
    let rows: Vec<[u32; 3]> = (0..p).flat_map(|a| (0..p).flat_map(move |b| (0..p).map(move |c| [a, b, c]))).collect();
    for r1 in &rows {
        for r2 in &rows {
            // cofactors of the third row
            let c0 = f.sub(f.mul(r1[1], r2[2]), f.mul(r1[2], r2[1]));
            let c1 = f.sub(f.mul(r1[2], r2[0]), f.mul(r1[0], r2[2]));
            let c2 = f.sub(f.mul(r1[0], r2[1]), f.mul(r1[1], r2[0]));
            for r3 in &rows {
                let det = f.add(f.add(f.mul(c0, r3[0]), f.mul(c1, r3[1])), f.mul(c2, r3[2]));
                sl3 += (det == 1) as u64;
            }
        }
    }
    Ok((gl2, sl2, sl3))
}

/// Class formulas specialized at `L = q` against brute-force group orders.
pub fn classcount_sanity(q: u64) -> Result<Vec<Check>, FiniteError> {
    if ![3, 5].contains(&q) {
        return Err(FiniteError::UnsupportedField(q));
    }
    let (gl2, sl2, sl3) = brute_force_orders(q)?;
    let rat = |n: u64| BigRational::from_integer(BigInt::from(n));
    let cases = [
        ("gl2", "class_gl(2)", class_gl(2), gl2),
        ("sl2", "class_sl(2)", class_sl(2), sl2),
        ("sl3", "class_sl(3)", class_sl(3), sl3),
        ("spin3", "class_spin(3) = |SL_2|", class_spin(3), sl2),
        ("spin4", "class_spin(4) = |SL_2|^2", class_spin(4), sl2 * sl2),
    ];
    Ok(cases
        .into_iter()
        .map(|(key, what, class, count)| {
            let value = class.eval_at(q);
            Check::new(
                format!("finite.classcount.{key}.q{q}"),
                value == rat(count),
                format!("{what} at L = {q} against enumeration"),
                value,
                count,
            )
        })
        .collect())
}

/// Every finite-model check at `q`, plus the class counts at 3 and 5.
pub fn verify_finite_suite(q: u64, seed: u64, samples: usize) -> CheckReport {
    let mut report = CheckReport::new("finite", seed);
    let f = Fp::new(q);
    let jobs: Vec<(&str, Result<Vec<Check>, FiniteError>)> = vec![
        ("finite.q6", verify_q6_claims(q)),
        ("finite.c4", verify_c4_structure(q)),
        ("finite.strata", f.and_then(|f| if SUPPORTED_Q.contains(&q) { verify_strata_partition(f) } else { Err(FiniteError::UnsupportedField(q)) })),
        ("finite.laws", verify_action_laws(q, seed, samples)),
        ("finite.classcount.q3", classcount_sanity(3)),
        ("finite.classcount.q5", classcount_sanity(5)),
    ];
    for (id, result) in jobs {
        match result {
            Ok(checks) => report.checks.extend(checks),
            Err(e) => report.push(Check::new(id, false, "check could not run", e.to_string(), "success")),
        }
    }
    report.sorted()
}
