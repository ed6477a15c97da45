//! End-to-end acceptance run: one line per criterion with its verdict and
//! wall-clock time against the bound.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bspin_core::clifford::verify_clifford_suite;
use bspin_core::dsl::{parse_bytes, MAX_DEPTH};
use bspin_core::finite::verify_finite_suite;
use bspin_core::lefschetz::LefschetzClass;
use bspin_core::motive::{
    all_ones, bspin, class_spin, leading_coeff_closed_form, leading_delta_coeff, solve_deltas, substitute_deltas,
    verify_g2_ledger, verify_spin78_ledger,
};
use bspin_core::report::{CheckReport, Status};
use bspin_core::suites::{dsl_corpus, verify_dsl_corpus, verify_ring_suite};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    summary: String,
}

fn outcome(ok: bool, summary: impl Into<String>) -> Outcome {
    Outcome { ok, summary: summary.into() }
}

fn report_outcome(report: &CheckReport) -> Outcome {
    let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
    let summary = if failed.is_empty() {
        format!("{} checks, 0 failed", report.checks.len())
    } else {
        format!("{} checks, failed: {}", report.checks.len(), failed.join(", "))
    };
    outcome(failed.is_empty(), summary)
}

fn lhs_of<'a>(report: &'a CheckReport, id: &str) -> Option<&'a str> {
    report.checks.iter().find(|c| c.id == id && c.status == Status::Pass).map(|c| c.lhs.as_str())
}

fn g2_ledger() -> Outcome {
    report_outcome(&verify_g2_ledger())
}

fn spin78_ledger() -> Outcome {
    report_outcome(&verify_spin78_ledger())
}

fn tower() -> Outcome {
    for n in 3..=30u32 {
        let e = match bspin(n) {
            Ok(e) => e,
            Err(err) => return outcome(false, format!("BSpin({n}): {err}")),
        };
        let lead = leading_delta_coeff(n).expect("n >= 3");
        if lead != leading_coeff_closed_form(n) || !lead.is_unit() {
            return outcome(false, format!("leading coefficient at n = {n} is {lead}"));
        }
        if e.support().iter().any(|&m| m > n - 1) {
            return outcome(false, format!("support of BSpin({n}) is {:?}", e.support()));
        }
    }
    outcome(true, "n = 3..30: leading coefficient matches the closed form, is a unit, support <= n-1")
}

fn solver() -> Outcome {
    let values = match solve_deltas(8) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("solve_deltas(8): {e}")),
    };
    if !values.values().all(LefschetzClass::is_one) {
        return outcome(false, format!("solved atoms {values:?}"));
    }
    for n in 2..=8 {
        let e = bspin(n).expect("n >= 1");
        let v = substitute_deltas(&e, &all_ones(&e)).expect("all atoms assigned");
        if v != class_spin(n).inv().expect("unit") {
            return outcome(false, format!("all-ones BSpin({n}) = {v}"));
        }
    }
    outcome(true, format!("{} atoms solved to 1; all-ones substitution gives Spin(n)^-1 for n = 2..8", values.len()))
}

fn clifford() -> Outcome {
    report_outcome(&verify_clifford_suite(0, 100))
}

fn finite() -> Outcome {
    let report = verify_finite_suite(5, 0, 100);
    let expected = [
        ("finite.q6.transitive", "3100"),
        ("finite.q6.points", "3100"),
        ("finite.q4.stabilizer", "8"),
        ("finite.d6.stabilizer", "3000"),
        ("finite.strata.total", "15625"),
    ];
    for (id, value) in expected {
        if lhs_of(&report, id) != Some(value) {
            return outcome(false, format!("{id}: expected {value}, report has {:?}", lhs_of(&report, id)));
        }
    }
    let strata = report
        .checks
        .iter()
        .filter(|c| c.id.strip_prefix("finite.strata.s").is_some_and(|r| r.starts_with(|ch: char| ch.is_ascii_digit())))
        .count();
    let counts = report.checks.iter().filter(|c| c.id.starts_with("finite.classcount.")).count();
    if strata != 40 || counts != 10 {
        return outcome(false, format!("{strata} stratum checks and {counts} class counts"));
    }
    let base = report_outcome(&report);
    outcome(base.ok, format!("Q6 one orbit of 3100, Q4 stabilizer 8, D6 stabilizer 3000; {}", base.summary))
}

fn ring() -> Outcome {
    report_outcome(&verify_ring_suite(0, 100))
}

/// Random bytes, random strings over the grammar's alphabet, and mutated
/// corpus entries.
fn fuzz_inputs(count: usize) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let alphabet: &[u8] = b"L0123456789+-*/^(), GSpinBDltacyoP";
    let corpus = dsl_corpus();
    let mut inputs: Vec<Vec<u8>> = vec![
        "(".repeat(MAX_DEPTH + 10).into_bytes(),
        "-".repeat(4096).into_bytes(),
        vec![b'9'; 4096],
        "L^".repeat(2048).into_bytes(),
        vec![0xff, 0xfe, b'L'],
    ];
    for i in 0..count {
        let len = rng.gen_range(0..=4096usize.min(16 << (i % 9)));
        let bytes = match i % 3 {
            0 => (0..len).map(|_| rng.gen()).collect(),
            1 => (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect(),
            _ => {
                let mut b = corpus[rng.gen_range(0..corpus.len())].as_bytes().to_vec();
                for _ in 0..rng.gen_range(1..4) {
                    let pos = rng.gen_range(0..=b.len());
                    match rng.gen_range(0..3) {
                        0 if pos < b.len() => {
                            b.remove(pos);
                        }
                        1 => b.insert(pos, alphabet[rng.gen_range(0..alphabet.len())]),
                        _ => b.insert(pos, rng.gen()),
                    }
                }
                b
            }
        };
        inputs.push(bytes);
    }
    inputs
}

fn dsl() -> Outcome {
    let corpus = verify_dsl_corpus();
    if !corpus.all_passed() || corpus.checks.len() != 50 {
        return report_outcome(&corpus);
    }
    let inputs = fuzz_inputs(5000);
    let mut accepted = 0;
    for input in &inputs {
        match catch_unwind(AssertUnwindSafe(|| parse_bytes(input))) {
            Ok(result) => accepted += usize::from(result.is_ok()),
            Err(_) => return outcome(false, format!("parser panicked on {:?}", String::from_utf8_lossy(input))),
        }
    }
    outcome(
        true,
        format!("50 corpus fixpoints; {} fuzz inputs without a crash ({accepted} parsed)", inputs.len()),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("g2 ledger", Duration::from_secs(1), g2_ledger),
        ("spin7/spin8 ledger", Duration::from_secs(1), spin78_ledger),
        ("spin tower n <= 30", Duration::from_secs(10), tower),
        ("atom solver", Duration::from_secs(10), solver),
        ("clifford suite", Duration::from_secs(30), clifford),
        ("finite models q = 5", Duration::from_secs(60), finite),
        ("ring suite", Duration::from_secs(5), ring),
        ("expression language", Duration::from_secs(60), dsl),
    ];
    let mut all_ok = true;
    for (i, (name, bound, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let ok = result.ok && elapsed < bound;
        all_ok &= ok;
        // Written straight to stderr so the lines show up without --nocapture.
        let _ = writeln!(
            std::io::stderr(),
            "[{}] {} {name}: {} ({:.2}s, bound {}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            result.summary,
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
    }
    assert!(all_ok, "some acceptance criteria failed");
}
