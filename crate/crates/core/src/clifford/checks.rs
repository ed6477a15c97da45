//! Seeded property checks for the Clifford algebra, the Pin/Spin groups,
//! the stabilizer homomorphisms and the groups `Δ_n`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, CheckReport};

use super::algebra::{blade_mul, product, CliffordElement};
use super::delta::{embed_into_spin, DeltaGroup, SignedBlade};
use super::gaussian::GaussRat;
use super::matrix::Matrix;
use super::pin::{is_orthogonal, is_pin, is_spin, rho_unchecked};
use super::quad::{add_vec, basis_vector, dot, phi_w_matrix, phi_w_template, scale_vec, QuadForm, QuadSpace};
use super::sample::{pin_sample, random_gauss, random_vector, unit_vector};
use super::CliffordError;

/// Collects many sampled comparisons into one check, keeping the first
/// counterexample.
struct Tally {
    id: String,
    detail: String,
    count: usize,
    failure: Option<(String, String)>,
}

impl Tally {
    fn new(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Tally { id: id.into(), detail: detail.into(), count: 0, failure: None }
    }

    fn record(&mut self, ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some((lhs(), rhs()));
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, lhs: &T, rhs: &T) {
        self.record(lhs == rhs, || lhs.to_string(), || rhs.to_string());
    }

    fn holds(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.record(ok, what, || "holds".to_string());
    }

    fn finish(self) -> Check {
        let detail = format!("{} ({} cases)", self.detail, self.count);
        match self.failure {
            None => Check::new(self.id, self.count > 0, detail, "all cases agree", "all cases agree"),
            Some((l, r)) => Check::new(self.id, false, detail, l, r),
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn vec_string(v: &[GaussRat]) -> String {
    let parts: Vec<String> = v.iter().map(GaussRat::to_string).collect();
    format!("({})", parts.join(", "))
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// A random element with a handful of random blades.
fn random_element(rng: &mut ChaCha8Rng, n: u32, terms: usize) -> CliffordElement {
    let mut acc = CliffordElement::zero(n);
    for _ in 0..terms {
        let b = rng.gen_range(0..1u32 << n);
        acc = &acc + &CliffordElement::blade(n, b, random_gauss(rng, 3));
    }
    acc
}

/// `v² = q(v)` and `vv' + v'v = 2h(v, v')` for random vectors.
pub fn verify_relations(n: u32, samples: usize, seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 1);
    let space = QuadSpace::new(n as usize, QuadForm::NegSum);
    let mut square = Tally::new(format!("clifford.relations.square.n{n}"), "v^2 = q(v)");
    let mut anti = Tally::new(format!("clifford.relations.anticommutator.n{n}"), "vv' + v'v = 2h(v,v')");
    let support = range(1, n as usize);
    for _ in 0..samples {
        let v = random_vector(&mut rng, n as usize, &support, 4);
        let w = random_vector(&mut rng, n as usize, &support, 4);
        let cv = CliffordElement::vector(&v);
        let cw = CliffordElement::vector(&w);
        square.eq(&(&cv * &cv), &CliffordElement::scalar(n, space.q(&v)));
        let lhs = &(&cv * &cw) + &(&cw * &cv);
        anti.eq(&lhs, &CliffordElement::scalar(n, space.h(&v, &w).scale_int(2)));
    }
    vec![square.finish(), anti.finish()]
}

/// The three involutions respect products.
pub fn verify_involutions(n: u32, samples: usize, seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 2);
    let mut eps = Tally::new(format!("clifford.involutions.epsilon.n{n}"), "eps(ab) = eps(a) eps(b)");
    let mut tr = Tally::new(format!("clifford.involutions.transpose.n{n}"), "(ab)^t = b^t a^t");
    let mut bar = Tally::new(format!("clifford.involutions.bar.n{n}"), "bar(ab) = bar(b) bar(a)");
    for _ in 0..samples {
        let a = random_element(&mut rng, n, 4);
        let b = random_element(&mut rng, n, 4);
        let ab = &a * &b;
        eps.eq(&ab.epsilon(), &(&a.epsilon() * &b.epsilon()));
        tr.eq(&ab.transpose(), &(&b.transpose() * &a.transpose()));
        bar.eq(&ab.bar(), &(&b.bar() * &a.bar()));
    }
    vec![eps.finish(), tr.finish(), bar.finish()]
}

/// Associativity of the blade product, exhaustively for small `n`.
pub fn verify_blade_associativity(n: u32) -> Check {
    let mut t = Tally::new(format!("clifford.blades.associative.n{n}"), "(e_S e_T) e_U = e_S (e_T e_U)");
    for a in 0..1u32 << n {
        for b in 0..1u32 << n {
            for c in 0..1u32 << n {
                let (s1, ab) = blade_mul(a, b);
                let (s2, l) = blade_mul(ab, c);
                let (s3, bc) = blade_mul(b, c);
                let (s4, r) = blade_mul(a, bc);
                t.record(l == r && s1 * s2 == s3 * s4, || format!("S={a:b} T={b:b} U={c:b}"), || "associative".into());
            }
        }
    }
    t.finish()
}

/// Pin samples: membership, `ρ ∈ O_n`, determinant parity, homomorphism,
/// kernel and the reflection formula.
pub fn verify_pin_and_rho(n: u32, samples: usize, seed: u64) -> Result<Vec<Check>, CliffordError> {
    let mut rng = rng_for(seed, 3);
    let nn = n as usize;
    let support = range(1, nn);
    let mut member = Tally::new(format!("clifford.pin.membership.n{n}"), "products of unit vectors pass is_pin");
    let mut orth = Tally::new(format!("clifford.rho.orthogonal.n{n}"), "rho(a) preserves q");
    let mut det = Tally::new(format!("clifford.rho.det.n{n}"), "det rho(a) = +1 iff a is even");
    let mut hom = Tally::new(format!("clifford.rho.homomorphism.n{n}"), "rho(ab) = rho(a) rho(b)");
    let mut refl = Tally::new(format!("clifford.rho.reflection.n{n}"), "rho(v)^2 = I for unit vectors v");
    for i in 0..samples {
        let a = pin_sample(&mut rng, nn, &support, 1 + i % 4)?;
        let b = pin_sample(&mut rng, nn, &support, 1 + (i / 4) % 4)?;
        member.holds(is_pin(&a) && is_spin(&a) == a.is_even(), || a.to_string());
        let ra = rho_unchecked(&a);
        let rb = rho_unchecked(&b);
        orth.holds(is_orthogonal(&ra), || ra.to_string());
        let expected_det = if a.is_even() { GaussRat::one() } else { GaussRat::int(-1) };
        det.eq(&ra.det(), &expected_det);
        hom.eq(&rho_unchecked(&(&a * &b)), &(&ra * &rb));
        let v = CliffordElement::vector(&unit_vector(&mut rng, nn, &support)?);
        let rv = rho_unchecked(&v);
        refl.eq(&(&rv * &rv), &Matrix::identity(nn));
    }
    let mut first = vec![GaussRat::one(); nn];
    first[0] = GaussRat::int(-1);
    let e1 = Check::equal(
        format!("clifford.rho.e1.n{n}"),
        "rho(e1) = diag(-1, 1, ..., 1)",
        &rho_unchecked(&CliffordElement::e(n, 1)),
        &Matrix::diagonal(&first),
    );
    let kernel = Check::equal(
        format!("clifford.rho.kernel.n{n}"),
        "rho(-1) = identity",
        &rho_unchecked(&CliffordElement::scalar(n, GaussRat::int(-1))),
        &Matrix::identity(nn),
    );
    Ok(vec![member.finish(), orth.finish(), det.finish(), hom.finish(), refl.finish(), e1, kernel])
}

/// `φ(β) = (β, 1)` for even `β` and `(e_1β, -1)` for odd `β`, from
/// `Pin_{n-1} = Pin(e_1^⊥)` to `Spin_n × μ_2`.
pub fn phi_pin(beta: &CliffordElement) -> (CliffordElement, i8) {
    if beta.is_even() {
        (beta.clone(), 1)
    } else {
        (&CliffordElement::e(beta.dim(), 1) * beta, -1)
    }
}

pub fn verify_phi_pin_embedding(n: u32, samples: usize, seed: u64) -> Result<Vec<Check>, CliffordError> {
    let mut rng = rng_for(seed, 4);
    let nn = n as usize;
    let support = range(2, nn);
    let mut checks = Vec::new();
    let names = ["even_even", "odd_even", "even_odd", "odd_odd"];
    let mut tallies: Vec<Tally> = names
        .iter()
        .map(|c| Tally::new(format!("clifford.phi_pin.{c}.n{n}"), format!("phi(b)phi(b') = phi(bb'), case {c}")))
        .collect();
    let mut stab = Tally::new(format!("clifford.phi_pin.stabilizes.n{n}"), "phi(b) in Spin_n with rho(phi(b))(e1) = xi e1");
    let e1_vec = basis_vector(nn, 1);
    for i in 0..samples.max(names.len()) {
        let case = i % 4;
        let len = |odd: bool, r: &mut ChaCha8Rng| if odd { [1, 3][r.gen_range(0..2)] } else { [2, 4][r.gen_range(0..2)] };
        let ka = len(case & 1 == 1, &mut rng);
        let kb = len(case & 2 == 2, &mut rng);
        let b1 = pin_sample(&mut rng, nn, &support, ka)?;
        let b2 = pin_sample(&mut rng, nn, &support, kb)?;
        let (x1, s1) = phi_pin(&b1);
        let (x2, s2) = phi_pin(&b2);
        let (x12, s12) = phi_pin(&(&b1 * &b2));
        let lhs = (&x1 * &x2, s1 * s2);
        tallies[case].record(
            lhs.0 == x12 && lhs.1 == s12,
            || format!("({}, {})", lhs.0, lhs.1),
            || format!("({x12}, {s12})"),
        );
        let img = rho_unchecked(&x1).apply(&e1_vec);
        stab.holds(is_spin(&x1) && img == scale_vec(&GaussRat::int(s1 as i64), &e1_vec), || vec_string(&img));
    }
    checks.extend(tallies.into_iter().map(Tally::finish));
    checks.push(stab.finish());
    Ok(checks)
}

/// `f_1 = (i e_1 + e_2)/2` and `f_2 = (i e_1 - e_2)/2` as coordinate vectors.
fn hyperbolic_pair(n: usize) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let half = GaussRat::ratio(1, 2);
    let half_i = &GaussRat::i() * &half;
    let mut f1 = vec![GaussRat::zero(); n];
    let mut f2 = vec![GaussRat::zero(); n];
    f1[0] = half_i.clone();
    f1[1] = half.clone();
    f2[0] = half_i;
    f2[1] = -half;
    (f1, f2)
}

/// `f(w) = w f_1 + 1` for `w ∈ ⟨e_3..e_n⟩`.
pub fn f_map(n: u32, w: &[GaussRat]) -> Result<CliffordElement, CliffordError> {
    if n < 3 || w.len() != n as usize || !w[0].is_zero() || !w[1].is_zero() {
        return Err(CliffordError::BadSupport);
    }
    let (f1, _) = hyperbolic_pair(n as usize);
    Ok(&(&CliffordElement::vector(w) * &CliffordElement::vector(&f1)) + &CliffordElement::one(n))
}

/// Random isotropic vector in `⟨e_3..e_n⟩`, built from disjoint isotropic
/// blocks `(a²-b², 2ab, i(a²+b²))` and `(1, i)`.
fn random_isotropic(rng: &mut ChaCha8Rng, n: usize) -> Vec<GaussRat> {
    let mut coords: Vec<usize> = (3..=n).collect();
    for i in (1..coords.len()).rev() {
        coords.swap(i, rng.gen_range(0..=i));
    }
    let mut w = vec![GaussRat::zero(); n];
    let mut rest = coords.as_slice();
    while rest.len() >= 2 {
        let c = random_gauss(rng, 2);
        let c = if c.is_zero() { GaussRat::one() } else { c };
        if rest.len() >= 3 && rng.gen_bool(0.5) {
            let a = random_gauss(rng, 2);
            let b = random_gauss(rng, 2);
            let a2 = &a * &a;
            let b2 = &b * &b;
            let block = [&a2 - &b2, (&a * &b).scale_int(2), &GaussRat::i() * &(&a2 + &b2)];
            for (k, x) in block.iter().enumerate() {
                w[rest[k] - 1] = &c * x;
            }
            rest = &rest[3..];
        } else {
            w[rest[0] - 1] = c.clone();
            w[rest[1] - 1] = &c * &GaussRat::i();
            rest = &rest[2..];
        }
    }
    w
}

fn is_unit_length(v: &[GaussRat]) -> bool {
    dot(v, v).is_one()
}

/// `(w/a)·((‖w‖² f_1 - w)/a)` with `a² = ‖w‖²`.
fn anisotropic_factors(n: usize, w: &[GaussRat], a: &GaussRat) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let (f1, _) = hyperbolic_pair(n);
    let a_inv = a.inv().expect("a is nonzero");
    let norm = dot(w, w);
    let left = scale_vec(&a_inv, w);
    let right = scale_vec(&a_inv, &add_vec(&scale_vec(&norm, &f1), &scale_vec(&GaussRat::int(-1), w)));
    (left, right)
}

/// `(e_1 - ½ i w)·e_1·(e_2 - ½ w)·e_2`.
fn isotropic_factors(n: usize, w: &[GaussRat]) -> [Vec<GaussRat>; 4] {
    let e1 = basis_vector(n, 1);
    let e2 = basis_vector(n, 2);
    let minus_half = GaussRat::ratio(-1, 2);
    [
        add_vec(&e1, &scale_vec(&(&minus_half * &GaussRat::i()), w)),
        e1.clone(),
        add_vec(&e2, &scale_vec(&minus_half, w)),
        e2,
    ]
}

fn product_of_vectors(n: u32, vs: &[Vec<GaussRat>]) -> CliffordElement {
    let elems: Vec<CliffordElement> = vs.iter().map(|v| CliffordElement::vector(v)).collect();
    product(n, &elems)
}

/// Read `w''` off `w'' f_1 + 1`: the coefficient of `e_2 e_j` is `-w''_j / 2`.
fn read_f_preimage(x: &CliffordElement) -> Vec<GaussRat> {
    let n = x.dim() as usize;
    let mut w = vec![GaussRat::zero(); n];
    for (j, wj) in w.iter_mut().enumerate().skip(2) {
        *wj = x.coeff(0b10 | 1 << j).scale_int(-2);
    }
    w
}

pub fn verify_f_properties(n: u32, samples: usize, seed: u64) -> Result<Vec<Check>, CliffordError> {
    let mut rng = rng_for(seed, 5);
    let nn = n as usize;
    let w_support = range(3, nn);
    let (f1, f2) = hyperbolic_pair(nn);
    let frame: Vec<Vec<GaussRat>> = std::iter::once(f1.clone())
        .chain(std::iter::once(f2.clone()))
        .chain((3..=nn).map(|j| basis_vector(nn, j)))
        .collect();
    let frame_matrix = Matrix::from_columns(&frame);
    let space = QuadSpace::new(nn, QuadForm::NegSum);

    let mut hom = Tally::new(format!("clifford.f.homomorphism.n{n}"), "f(w) f(w') = f(w+w')");
    let mut spin = Tally::new(format!("clifford.f.spin.n{n}"), "f(w) is in Spin_n");
    let mut aniso = Tally::new(format!("clifford.f.anisotropic.n{n}"), "f(w) = (w/a)((|w|^2 f1 - w)/a) with unit factors");
    let mut iso = Tally::new(format!("clifford.f.isotropic.n{n}"), "f(w) = (e1 - i w/2) e1 (e2 - w/2) e2 with unit factors");
    let mut stab = Tally::new(format!("clifford.f.stabilizes_f1.n{n}"), "rho(f(w)) f1 = f1");
    let mut template = Tally::new(format!("clifford.f.phi_template.n{n}"), "rho(f(w)) matches phi_w in the frame (f1, f2, e3..en)");
    let mut normal = Tally::new(format!("clifford.f.normal.n{n}"), "alpha f(w) bar(alpha) = f(w'') with w'' the W-part of rho(alpha) w");

    for i in 0..samples {
        let w = random_vector(&mut rng, nn, &w_support, 3);
        let w2 = random_vector(&mut rng, nn, &w_support, 3);
        let fw = f_map(n, &w)?;
        let fw2 = f_map(n, &w2)?;
        hom.eq(&(&fw * &fw2), &f_map(n, &add_vec(&w, &w2))?);
        spin.holds(is_spin(&fw), || fw.to_string());

        // Anisotropic: w = a·u with u a unit vector in W.
        let u = unit_vector(&mut rng, nn, &w_support)?;
        let a = loop {
            let a = random_gauss(&mut rng, 3);
            if !a.is_zero() {
                break a;
            }
        };
        let wa = scale_vec(&a, &u);
        let (left, right) = anisotropic_factors(nn, &wa, &a);
        let factored = product_of_vectors(n, &[left.clone(), right.clone()]);
        aniso.record(
            factored == f_map(n, &wa)? && is_unit_length(&left) && is_unit_length(&right),
            || factored.to_string(),
            || f_map(n, &wa).map(|x| x.to_string()).unwrap_or_default(),
        );

        // Isotropic: needs at least two coordinates in W.
        if nn >= 4 {
            let wi = random_isotropic(&mut rng, nn);
            let factors = isotropic_factors(nn, &wi);
            let factored = product_of_vectors(n, &factors);
            let expected = f_map(n, &wi)?;
            iso.record(
                dot(&wi, &wi).is_zero() && factored == expected && factors.iter().all(|v| is_unit_length(v)),
                || factored.to_string(),
                || expected.to_string(),
            );
        }

        let r = rho_unchecked(&fw);
        stab.eq(&vec_string(&r.apply(&f1)), &vec_string(&f1));
        let phi = phi_w_template(&space, &w)?;
        let lhs = &r * &frame_matrix;
        let rhs = &frame_matrix * &phi;
        template.eq(&lhs, &rhs);

        // Normality: conjugate by f(w') or by e_i e_j with i, j >= 3.
        let alpha = if i % 2 == 0 || nn < 4 {
            fw2.clone()
        } else {
            let p = rng.gen_range(3..nn);
            let q = rng.gen_range(p + 1..=nn);
            &CliffordElement::e(n, p as u32) * &CliffordElement::e(n, q as u32)
        };
        let conj = &(&alpha * &fw) * &alpha.bar();
        let w_read = read_f_preimage(&conj);
        // ρ(f(w')) moves w by a multiple of f_1, so compare W-components only
        let mut expected_w = rho_unchecked(&alpha).apply(&w);
        expected_w[0] = GaussRat::zero();
        expected_w[1] = GaussRat::zero();
        let ok = conj == f_map(n, &w_read)? && w_read == expected_w;
        normal.record(ok, || conj.to_string(), || vec_string(&expected_w));
    }

    let mut checks = vec![hom.finish(), spin.finish(), aniso.finish()];
    if nn >= 4 {
        checks.push(iso.finish());
        let mut w = vec![GaussRat::zero(); nn];
        w[2] = GaussRat::one();
        w[3] = GaussRat::i();
        let fixed = product_of_vectors(n, &isotropic_factors(nn, &w));
        checks.push(Check::equal(
            format!("clifford.f.isotropic_e3_ie4.n{n}"),
            "w = e3 + i e4 satisfies the isotropic factorization",
            &fixed,
            &f_map(n, &w)?,
        ));
        let mut w = vec![GaussRat::zero(); nn];
        w[2] = GaussRat::int(3);
        w[3] = GaussRat::int(4);
        let (left, right) = anisotropic_factors(nn, &w, &GaussRat::int(5));
        checks.push(Check::equal(
            format!("clifford.f.anisotropic_3e3_4e4.n{n}"),
            "w = 3e3 + 4e4, a = 5 satisfies the anisotropic factorization",
            &product_of_vectors(n, &[left, right]),
            &f_map(n, &w)?,
        ));
    }
    checks.push(Check::equal(
        format!("clifford.f.zero.n{n}"),
        "f(0) = 1",
        &f_map(n, &vec![GaussRat::zero(); nn])?,
        &CliffordElement::one(n),
    ));
    checks.extend([stab.finish(), template.finish(), normal.finish()]);
    Ok(checks)
}

/// `η = e_1⋯e_8`: a central element of order 2 in `Spin_8`.
pub fn eta_center_check(samples: usize, seed: u64) -> Result<Vec<Check>, CliffordError> {
    let mut rng = rng_for(seed, 6);
    let n = 8u32;
    let eta = CliffordElement::blade(n, 0xff, GaussRat::one());
    let mut checks = vec![
        Check::equal("clifford.eta.square", "eta^2 = 1", &(&eta * &eta), &CliffordElement::one(n)),
        Check::new("clifford.eta.spin", is_spin(&eta), "eta is in Spin_8", is_spin(&eta), true),
        Check::equal(
            "clifford.eta.rho",
            "rho(eta) = -I",
            &rho_unchecked(&eta),
            &Matrix::diagonal(&vec![GaussRat::int(-1); 8]),
        ),
    ];
    let all = range(1, 8);
    let mut central = Tally::new("clifford.eta.central", "eta commutes with sampled Spin_8 elements");
    for _ in 0..samples {
        let g = pin_sample(&mut rng, 8, &all, 2)?;
        central.eq(&(&eta * &g), &(&g * &eta));
    }
    checks.push(central.finish());

    // (g, ξ) ↦ g for ξ = 1 and η g for ξ = -1, on Spin_7 × μ_2.
    let psi = |g: &CliffordElement, xi: i8| if xi == 1 { g.clone() } else { &eta * g };
    let seven = range(1, 7);
    let mut law = Tally::new("clifford.eta.embedding", "(g,-1) -> eta g is multiplicative on Spin_7 x mu_2");
    for i in 0..samples {
        let g = pin_sample(&mut rng, 8, &seven, 2)?;
        let h = pin_sample(&mut rng, 8, &seven, 2)?;
        let (xi, zeta) = ([1i8, -1][i % 2], [1i8, -1][(i / 2) % 2]);
        law.eq(&psi(&(&g * &h), xi * zeta), &(&psi(&g, xi) * &psi(&h, zeta)));
    }
    checks.push(law.finish());
    Ok(checks)
}

/// Order, closure, ρ-image, kernel and center data for `Δ_n`.
pub fn verify_delta(n: u32) -> Vec<Check> {
    let g = DeltaGroup::new(n);
    let mut checks = vec![
        Check::new(
            format!("clifford.delta.order.n{n:02}"),
            g.order() == 1 << (n + 1),
            "|Delta_n| = 2^(n+1)",
            g.order(),
            1u64 << (n + 1),
        ),
        Check::new(format!("clifford.delta.closed.n{n:02}"), g.is_closed(), "closed under the Clifford product", g.is_closed(), true),
    ];
    let mut fibers: std::collections::BTreeMap<Vec<i8>, Vec<SignedBlade>> = Default::default();
    for &x in &g.elements {
        fibers.entry(x.rho_diagonal(n)).or_default().push(x);
    }
    let all_diag = fibers.len() == 1 << n && fibers.values().all(|f| f.len() == 2);
    checks.push(Check::new(
        format!("clifford.delta.rho_image.n{n:02}"),
        all_diag,
        "rho maps onto all 2^n diagonal sign matrices with fibers of size 2",
        fibers.len(),
        1u64 << n,
    ));
    let kernel: BTreeSet<SignedBlade> = fibers.get(&vec![1i8; n as usize]).cloned().unwrap_or_default().into_iter().collect();
    let expected_kernel = BTreeSet::from([SignedBlade::new(1, 0), SignedBlade::new(-1, 0)]);
    checks.push(Check::new(
        format!("clifford.delta.kernel.n{n:02}"),
        kernel == expected_kernel,
        "kernel of rho on Delta_n is {+1, -1}",
        format!("{kernel:?}"),
        format!("{expected_kernel:?}"),
    ));
    let squares = g.squares();
    checks.push(Check::new(
        format!("clifford.delta.squares.n{n:02}"),
        squares.is_subset(&expected_kernel),
        "every square lies in {+1, -1}",
        format!("{squares:?}"),
        format!("{expected_kernel:?}"),
    ));
    let center = g.center().len();
    if n == 2 {
        checks.push(Check::new("clifford.delta.center.n02", center == 2 && !g.is_abelian(), "Delta_2 is nonabelian with center {+1,-1}", center, 2));
    } else {
        checks.push(Check::descriptive(format!("clifford.delta.center.n{n:02}"), "center order", center));
    }
    checks.push(Check::descriptive(
        format!("clifford.delta.abelianization.n{n:02}"),
        "abelianization order",
        g.abelianization_order(),
    ));
    checks
}

/// `e_i ↦ e_i e_{n+1}` is an injective homomorphism `Δ_n → Spin_{n+1}`
/// onto the preimage of the diagonal matrices in `SO_{n+1}`.
pub fn delta_embed_spin(n: u32) -> Vec<Check> {
    let g = DeltaGroup::new(n);
    let images: Vec<SignedBlade> = g.elements.iter().map(|&x| embed_into_spin(n, x)).collect();
    let mut hom = Tally::new(format!("clifford.delta_embed.homomorphism.n{n}"), "embedding is multiplicative on all pairs");
    for (i, &x) in g.elements.iter().enumerate() {
        for (j, &y) in g.elements.iter().enumerate() {
            let lhs = embed_into_spin(n, x.mul(y));
            let rhs = images[i].mul(images[j]);
            hom.record(lhs == rhs, || lhs.label(), || rhs.label());
        }
    }
    let distinct: BTreeSet<SignedBlade> = images.iter().copied().collect();
    let in_spin = images.iter().all(|x| is_spin(&x.to_element(n + 1)));
    let target: BTreeSet<SignedBlade> = DeltaGroup::new(n + 1)
        .elements
        .into_iter()
        .filter(|x| x.rho_diagonal(n + 1).iter().filter(|&&s| s < 0).count() % 2 == 0)
        .collect();
    vec![
        hom.finish(),
        Check::new(
            format!("clifford.delta_embed.injective.n{n}"),
            distinct.len() == g.order(),
            "embedding is injective",
            distinct.len(),
            g.order(),
        ),
        Check::new(format!("clifford.delta_embed.spin.n{n}"), in_spin, "image lies in Spin_(n+1)", in_spin, true),
        Check::new(
            format!("clifford.delta_embed.image.n{n}"),
            distinct == target,
            "image is the preimage of the diagonal matrices of SO_(n+1)",
            distinct.len(),
            target.len(),
        ),
    ]
}

/// The split-form `φ_w`: fixes `e_1`, preserves `q_n`, and `w ↦ φ_w` is a
/// homomorphism.
pub fn verify_phi_w(n: u32, samples: usize, seed: u64) -> Result<Vec<Check>, CliffordError> {
    let mut rng = rng_for(seed, 7);
    let nn = n as usize;
    let space = QuadSpace::new(nn, QuadForm::Split);
    let support = range(3, nn);
    let mut hom = Tally::new(format!("clifford.phi_w.homomorphism.n{n}"), "phi_w phi_w' = phi_(w+w')");
    let mut pres = Tally::new(format!("clifford.phi_w.preserves_q.n{n}"), "phi_w preserves q_n and fixes e1");
    let e1 = basis_vector(nn, 1);
    for _ in 0..samples {
        let w = random_vector(&mut rng, nn, &support, 3);
        let w2 = random_vector(&mut rng, nn, &support, 3);
        let m = phi_w_matrix(nn, &w)?;
        let m2 = phi_w_matrix(nn, &w2)?;
        hom.eq(&(&m * &m2), &phi_w_matrix(nn, &add_vec(&w, &w2))?);
        pres.holds(space.preserves(&m) && m.apply(&e1) == e1, || m.to_string());
    }
    let mut checks = vec![
        Check::equal(
            format!("clifford.phi_w.zero.n{n}"),
            "phi_0 = identity",
            &phi_w_matrix(nn, &vec![GaussRat::zero(); nn])?,
            &Matrix::identity(nn),
        ),
        hom.finish(),
        pres.finish(),
    ];
    if nn >= 3 {
        let w = basis_vector(nn, 3);
        let m = phi_w_matrix(nn, &w)?;
        let mut expected = add_vec(&basis_vector(nn, 2), &w);
        expected[0] = -space.q(&w);
        checks.push(Check::new(
            format!("clifford.phi_w.e3.n{n}"),
            m.column(1) == expected,
            "phi_e3(e2) = -q(e3) e1 + e2 + e3",
            vec_string(&m.column(1)),
            vec_string(&expected),
        ));
    }
    Ok(checks)
}

type Job<'a> = (String, Box<dyn FnOnce() -> Result<Vec<Check>, CliffordError> + Send + 'a>);

/// Every Clifford check at its default scope. Independent jobs run on
/// scoped threads; the report is sorted by id afterwards.
pub fn verify_clifford_suite(seed: u64, samples: usize) -> CheckReport {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=4 {
        jobs.push((format!("clifford.blades.n{n}"), Box::new(move || Ok(vec![verify_blade_associativity(n)]))));
    }
    for n in 2..=8 {
        jobs.push((format!("clifford.relations.n{n}"), Box::new(move || Ok(verify_relations(n, samples, seed)))));
        jobs.push((format!("clifford.involutions.n{n}"), Box::new(move || Ok(verify_involutions(n, samples, seed)))));
        jobs.push((format!("clifford.rho.n{n}"), Box::new(move || verify_pin_and_rho(n, samples, seed))));
        jobs.push((format!("clifford.phi_w.n{n}"), Box::new(move || verify_phi_w(n, samples, seed))));
    }
    for n in 3..=8 {
        jobs.push((format!("clifford.phi_pin.n{n}"), Box::new(move || verify_phi_pin_embedding(n, samples, seed))));
        jobs.push((format!("clifford.f.n{n}"), Box::new(move || verify_f_properties(n, samples, seed))));
    }
    jobs.push(("clifford.eta".into(), Box::new(move || eta_center_check(samples, seed))));
    jobs.push((
        "clifford.delta".into(),
        Box::new(|| Ok((1..=10).flat_map(verify_delta).collect())),
    ));
    jobs.push((
        "clifford.delta_embed".into(),
        Box::new(|| Ok((1..=6).flat_map(delta_embed_spin).collect())),
    ));

    let results: Vec<(String, Result<Vec<Check>, CliffordError>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(id, job)| (id, scope.spawn(job)))
            .collect();
        handles
            .into_iter()
            .map(|(id, h)| (id, h.join().expect("check job panicked")))
            .collect()
    });

    let mut report = CheckReport::new("clifford", seed);
    for (id, result) in results {
        match result {
            Ok(checks) => report.checks.extend(checks),
            Err(e) => report.push(Check::new(id, false, format!("sampling failed: {e}"), e.to_string(), "success")),
        }
    }
    report.sorted()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_with_few_samples() {
        let report = verify_clifford_suite(0, 8);
        let failures: Vec<_> = report.failures().into_iter().map(|c| format!("{} {} vs {}", c.id, c.lhs, c.rhs)).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }

    #[test]
    fn f_map_rejects_bad_support() {
        let mut w = vec![GaussRat::zero(); 4];
        w[1] = GaussRat::one();
        assert_eq!(f_map(4, &w), Err(CliffordError::BadSupport));
    }
}
