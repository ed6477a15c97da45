//! Named verification suites, as run by the command-line verifier.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::verify_clifford_suite;
use crate::dsl;
use crate::finite::{verify_finite_suite, SUPPORTED_Q};
use crate::lefschetz::{cyclotomic, IntPoly, LefschetzClass, RingError};
use crate::lefschetz::cyclotomic::divisors;
use crate::motive::{
    all_ones, bspin, class_spin, leading_coeff_closed_form, leading_delta_coeff, solve_deltas, substitute_deltas,
    verify_g2_ledger, verify_spin78_ledger,
};
use crate::report::{Check, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ring,
    G2,
    Spin78,
    Tower,
    Clifford,
    Finite,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] = [Suite::Ring, Suite::G2, Suite::Spin78, Suite::Tower, Suite::Clifford, Suite::Finite];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::G2 => "g2",
            Suite::Spin78 => "spin78",
            Suite::Tower => "tower",
            Suite::Clifford => "clifford",
            Suite::Finite => "finite",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("q = {0} is not supported; choose one of {SUPPORTED_Q:?}")]
    UnsupportedQ(u64),
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
    pub q: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, samples: 100, q: 5 }
    }
}

/// Run a suite. `All` concatenates every individual suite under the name
/// `all`; checks are sorted by id in every case.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<CheckReport, SuiteError> {
    if matches!(suite, Suite::Finite | Suite::All) && !SUPPORTED_Q.contains(&opts.q) {
        return Err(SuiteError::UnsupportedQ(opts.q));
    }
    let mut report = match suite {
        Suite::Ring => verify_ring_suite(opts.seed, opts.samples),
        Suite::G2 => verify_g2_ledger(),
        Suite::Spin78 => verify_spin78_ledger(),
        Suite::Tower => verify_tower_suite(),
        Suite::Clifford => verify_clifford_suite(opts.seed, opts.samples),
        Suite::Finite => verify_finite_suite(opts.q, opts.seed, opts.samples),
        Suite::All => {
            let mut all = CheckReport::new("all", opts.seed);
            for s in Suite::INDIVIDUAL {
                all.extend(run_suite(s, opts)?);
            }
            all
        }
    };
    report.suite = suite.name().to_string();
    report.seed = opts.seed;
    Ok(report.sorted())
}

/// A random class `± core · L^a · ∏ (L^i - 1)^{e_i}` with small entries.
pub fn random_class<R: Rng>(rng: &mut R) -> LefschetzClass {
    let degree = rng.gen_range(0..=4);
    let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-3..=3)).collect();
    let mut c = LefschetzClass::from_poly(IntPoly::from_i64(&coeffs));
    if c.is_zero() {
        c = LefschetzClass::integer(rng.gen_range(1..=5));
    }
    c = &c * &random_unit(rng);
    c
}

/// A random unit `± L^a · ∏ (L^i - 1)^{e_i}`.
pub fn random_unit<R: Rng>(rng: &mut R) -> LefschetzClass {
    let mut u = LefschetzClass::l_pow(rng.gen_range(-3..=3));
    for _ in 0..rng.gen_range(0..=3) {
        let i = rng.gen_range(1..=12);
        let f = LefschetzClass::l_pow_minus_one(i);
        let e = rng.gen_range(-2..=2);
        u = &u * &f.pow(e).expect("L^i-1 is a unit");
    }
    if rng.gen_bool(0.5) {
        u = -u;
    }
    u
}

/// Rebuild a class from its expanded fraction, a path that never sees the
/// canonical factorization of the original.
fn from_fraction(c: &LefschetzClass) -> Result<LefschetzClass, RingError> {
    let (num, den) = c.as_fraction();
    LefschetzClass::from_poly(num).div(&LefschetzClass::from_poly(den))
}

struct Tally {
    id: String,
    detail: String,
    total: usize,
    failure: Option<(String, String)>,
}

impl Tally {
    fn new(id: &str, detail: &str) -> Self {
        Tally { id: id.into(), detail: detail.into(), total: 0, failure: None }
    }

    fn record(&mut self, ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        self.total += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some((lhs(), rhs()));
        }
    }

    fn finish(self) -> Check {
        let detail = format!("{} ({} cases)", self.detail, self.total);
        match self.failure {
            None => Check::new(self.id, true, detail, "all cases hold", "all cases hold"),
            Some((l, r)) => Check::new(self.id, false, detail, l, r),
        }
    }
}

/// Canonical form against cross-multiplication, cyclotomic factorizations
/// of `L^n - 1`, and unit inversion.
pub fn verify_ring_suite(seed: u64, samples: usize) -> CheckReport {
    let mut report = CheckReport::new("ring", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut agree = Tally::new("ring.canonical_vs_cross", "canonical equality agrees with cross-multiplication");
    let mut canonical = Tally::new("ring.canonical_form", "every sampled value is in canonical form");
    let mut equal_pairs = 0;
    for i in 0..samples {
        let a = random_class(&mut rng);
        let b = match i % 4 {
            0 => from_fraction(&a).expect("denominator is a unit"),
            1 => {
                let u = random_unit(&mut rng);
                &(&a * &u) * &u.inv().expect("unit")
            }
            2 => &a + &LefschetzClass::l_pow(rng.gen_range(-2..=2)),
            _ => random_class(&mut rng),
        };
        let structural = a == b;
        let crossed = a.eq_by_cross_multiplication(&b);
        equal_pairs += usize::from(structural);
        agree.record(structural == crossed, || format!("{a} vs {b}: canonical {structural}"), || format!("cross {crossed}"));
        for c in [&a, &b] {
            canonical.record(c.is_canonical(), || c.to_string(), || "canonical".into());
        }
    }
    report.push(agree.finish());
    report.push(canonical.finish());
    report.push(Check::descriptive("ring.canonical_vs_cross.equal_pairs", "pairs equal as classes", equal_pairs));

    let mut cyclo = Tally::new("ring.cyclotomic_product", "product of Phi_d over d | n equals L^n - 1 for n <= 64");
    for n in 1..=64u64 {
        let product = divisors(n).into_iter().fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
        let target = IntPoly::x_pow_minus_one(n as usize);
        cyclo.record(product == target, || format!("n = {n}: {}", product.render("L")), || target.render("L"));
    }
    report.push(cyclo.finish());

    let mut round_trip = Tally::new("ring.unit_inverse", "u * u^-1 = 1 and (u^-1)^-1 = u for random units");
    let mut non_units = Tally::new("ring.non_unit_rejected", "inverting a non-unit class fails");
    for _ in 0..samples {
        let u = random_unit(&mut rng);
        let inv = u.inv().expect("unit");
        let ok = u.is_unit() && (&u * &inv).is_one() && inv.inv().as_ref() == Ok(&u);
        round_trip.record(ok, || u.to_string(), || inv.to_string());
        let a = random_class(&mut rng);
        let expected_unit = a.core().is_unit();
        non_units.record(a.inv().is_ok() == expected_unit, || a.to_string(), || format!("unit: {expected_unit}"));
    }
    let two_plus_l = &LefschetzClass::l() + &LefschetzClass::integer(2);
    non_units.record(
        two_plus_l.inv() == Err(RingError::NotAUnit(two_plus_l.to_string())),
        || format!("{:?}", two_plus_l.inv()),
        || "NotAUnit".into(),
    );
    non_units.record(
        LefschetzClass::zero().inv() == Err(RingError::ZeroInverse),
        || format!("{:?}", LefschetzClass::zero().inv()),
        || "ZeroInverse".into(),
    );
    report.push(round_trip.finish());
    report.push(non_units.finish());

    let mut hom = Tally::new("ring.eval_homomorphism", "specializing L to q = 2, 3 respects sums and products");
    for _ in 0..samples {
        let a = random_class(&mut rng);
        let b = random_class(&mut rng);
        for q in [2, 3] {
            let (x, y) = (a.eval_at(q), b.eval_at(q));
            let ok = (&a * &b).eval_at(q) == &x * &y && (&a + &b).eval_at(q) == &x + &y;
            hom.record(ok, || format!("{a}, {b} at {q}"), || "homomorphism".into());
        }
    }
    report.push(hom.finish());
    report.sorted()
}

/// Leading coefficients and support of the spin tower for `3 ≤ n ≤ 30`,
/// the solved atoms, and the all-ones substitution for `2 ≤ n ≤ 8`.
pub fn verify_tower_suite() -> CheckReport {
    let mut report = CheckReport::new("tower", 0);
    for n in 3..=30u32 {
        let expr = match bspin(n) {
            Ok(e) => e,
            Err(e) => {
                report.push(Check::new(format!("tower.bspin.n{n:02}"), false, "BSpin recursion", e, "a value"));
                continue;
            }
        };
        let lead = leading_delta_coeff(n).expect("n >= 3");
        let closed = leading_coeff_closed_form(n);
        report.push(Check::equal(
            format!("tower.leading.n{n:02}"),
            format!("coefficient of BDelta({}) in BSpin({n})", n - 1),
            &lead,
            &closed,
        ));
        report.push(Check::new(format!("tower.leading_unit.n{n:02}"), lead.is_unit(), "leading coefficient is a unit", &lead, "unit"));
        let support = expr.support();
        let max = support.iter().max().copied().unwrap_or(0);
        report.push(Check::new(
            format!("tower.support.n{n:02}"),
            max < n,
            format!("atoms of BSpin({n}) have index at most {}", n - 1),
            format!("{support:?}"),
            format!("max <= {}", n - 1),
        ));
    }

    match solve_deltas(8) {
        Ok(values) => {
            let ones = values.values().all(LefschetzClass::is_one);
            let shown: Vec<String> = values.iter().map(|(m, v)| format!("BDelta({m}) = {v}")).collect();
            report.push(Check::new("tower.solve_deltas", ones, "solved atoms for n <= 8 are all 1", shown.join(", "), "all 1"));
        }
        Err(e) => report.push(Check::new("tower.solve_deltas", false, "solved atoms for n <= 8 are all 1", e, "all 1")),
    }

    for n in 2..=8u32 {
        let id = format!("tower.substitute.n{n}");
        let detail = format!("BSpin({n}) with every atom set to 1 is Spin({n})^-1");
        let target = class_spin(n).inv().expect("class of Spin is a unit");
        let value = bspin(n).and_then(|e| substitute_deltas(&e, &all_ones(&e)));
        match value {
            Ok(v) => report.push(Check::equal(id, detail, &v, &target)),
            Err(e) => report.push(Check::new(id, false, detail, e, target)),
        }
    }
    report.sorted()
}

/// Expressions covering every function and operator of the expression
/// language.
pub fn dsl_corpus() -> Vec<&'static str> {
    vec![
        "1", "0", "-7", "L", "L^2", "L^-3", "-L^-3", "2+3*L", "(2+3*L)*L^-1", "L^2-2*L+1",
        "(L-1)^3", "(L^6-1)^-1", "(L^2-1)/(L-1)", "(L+2)*(L+1)^-2", "cyclo(1)", "cyclo(7)", "cyclo(12)",
        "cyclo(30)*cyclo(15)", "GL(1)", "GL(2)", "GL(3)/SL(3)", "SL(2)", "SL(4)", "Spin(2)", "Spin(3)",
        "Spin(7)", "Spin(8)", "Spin(9)^-1", "G2()", "G2() * L^-6 * (L^6-1)^-1 * (L^2-1)^-1", "1/G2()",
        "BSpin(1)", "BSpin(2)", "BSpin(3)", "BSpin(5)", "BSpin(7)", "BSpin(8)", "BSpin(12)", "BPin(0)",
        "BPin(2)", "BPin(6)", "BG(4, 2)", "BG(7, 3)", "BDelta(5)", "2*BDelta(3) - BDelta(3)",
        "L*BDelta(4) + BDelta(2)/(L-1)", "BSpin(6) - BSpin(6)", "BSpin(9) * L^3 + 1",
        "-(BSpin(4) + BPin(4))", "((((L))))^2 - ---1",
    ]
}

/// Parse, evaluate, render and re-parse every corpus expression.
pub fn verify_dsl_corpus() -> CheckReport {
    let mut report = CheckReport::new("dsl", 0);
    for (i, src) in dsl_corpus().into_iter().enumerate() {
        let id = format!("dsl.fixpoint.{i:02}");
        let outcome = dsl::evaluate(src).and_then(|v| {
            let rendered = dsl::render(&v);
            let again = dsl::evaluate(&rendered)?;
            Ok((v, rendered, again))
        });
        match outcome {
            Ok((v, rendered, again)) => {
                let stable = dsl::render(&again) == rendered;
                report.push(Check::new(id, v == again && stable, format!("{src} renders to a fixpoint"), rendered, again));
            }
            Err(e) => report.push(Check::new(id, false, format!("{src} evaluates"), e, "a value")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("dsl".parse::<Suite>().is_err());
    }

    #[test]
    fn ring_suite_passes() {
        let r = verify_ring_suite(0, 100);
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn corpus_has_fifty_fixpoints() {
        assert_eq!(dsl_corpus().len(), 50);
        let r = verify_dsl_corpus();
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn unsupported_q_is_rejected() {
        let opts = SuiteOptions { q: 7, ..SuiteOptions::default() };
        assert_eq!(run_suite(Suite::Finite, &opts), Err(SuiteError::UnsupportedQ(7)));
    }
}
