//! Product-form rendering of classes.
//!
//! Cyclotomic factors are regrouped greedily into `(L^n-1)` blocks, largest
//! `n` first, separately for the numerator and denominator multisets. The
//! output is accepted by the expression parser.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::class::LefschetzClass;
use super::cyclotomic::{cyclotomic, divisors, totient};

/// Split a multiset of cyclotomic indices into `(L^n-1)` blocks plus leftovers.
///
/// Returns `(blocks, leftovers)`, each as `index -> multiplicity`.
pub fn regroup_blocks(multiset: &BTreeMap<u64, i64>) -> (BTreeMap<u64, i64>, BTreeMap<u64, i64>) {
    let mut remaining = multiset.clone();
    let mut blocks = BTreeMap::new();
    let candidates: Vec<u64> = multiset.keys().rev().copied().collect();
    for n in candidates {
        let divs = divisors(n);
        let take = divs
            .iter()
            .map(|d| remaining.get(d).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        if take > 0 {
            for d in &divs {
                *remaining.get_mut(d).unwrap() -= take;
            }
            blocks.insert(n, take);
        }
    }
    remaining.retain(|_, m| *m > 0);
    (blocks, remaining)
}

fn with_exponent(base: String, e: i64) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

fn leftover_factor(d: u64) -> String {
    if totient(d) <= 4 {
        format!("({})", cyclotomic(d))
    } else {
        format!("cyclo({d})")
    }
}

/// Text form like `L^-6 * (L^6-1)^-1 * (L^2-1)^-1`.
pub fn render_class(x: &LefschetzClass) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut factors: Vec<String> = Vec::new();
    let mut prefix = "";
    let core = x.core();
    if core.is_unit() {
        if core.constant_term().is_negative() {
            prefix = "-";
        }
    } else if core.degree() == 0 {
        // A bare integer; its sign reads naturally as a prefix.
        let c = core.constant_term();
        if c.is_negative() {
            prefix = "-";
        }
        factors.push(c.abs().to_string());
    } else {
        factors.push(format!("({core})"));
    }

    match x.l_exp() {
        0 => {}
        1 => factors.push("L".to_string()),
        k => factors.push(format!("L^{k}")),
    }

    let positive: BTreeMap<u64, i64> = x.cyc_exps().iter().filter(|(_, &m)| m > 0).map(|(&d, &m)| (d, m)).collect();
    let negative: BTreeMap<u64, i64> = x.cyc_exps().iter().filter(|(_, &m)| m < 0).map(|(&d, &m)| (d, -m)).collect();
    for (multiset, sign) in [(positive, 1i64), (negative, -1i64)] {
        let (blocks, leftovers) = regroup_blocks(&multiset);
        for (&n, &m) in blocks.iter().rev() {
            let base = if n == 1 { "(L-1)".to_string() } else { format!("(L^{n}-1)") };
            factors.push(with_exponent(base, sign * m));
        }
        for (&d, &m) in &leftovers {
            factors.push(with_exponent(leftover_factor(d), sign * m));
        }
    }

    if factors.is_empty() {
        return format!("{prefix}1");
    }
    format!("{prefix}{}", factors.join(" * "))
}
