//! Cyclotomic polynomials Φ_d and the number theory needed to search for them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPoly;

fn poly_memo() -> &'static Mutex<HashMap<u64, IntPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn value_memo() -> &'static Mutex<HashMap<(u64, u64), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(u64, u64), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The d-th cyclotomic polynomial, built as `(L^d - 1) / ∏_{e | d, e < d} Φ_e`.
///
/// Results are memoized process-wide. The table is only ever filled with the
/// value computed from the recurrence, so racing writers agree.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = poly_memo().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut acc = IntPoly::x_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi_e = cyclotomic(e);
        acc = acc
            .exact_div(&phi_e)
            .expect("Φ_e divides L^d - 1 for every e | d");
    }
    poly_memo().lock().unwrap().entry(d).or_insert(acc).clone()
}

/// Φ_d(a) for an integer a ≥ 2, from `∏_{e | d} (a^e - 1)^{μ(d/e)}`.
///
/// Used as a cheap necessary test before attempting polynomial division.
pub fn cyclotomic_value(d: u64, a: u64) -> BigInt {
    debug_assert!(a >= 2);
    if let Some(v) = value_memo().lock().unwrap().get(&(d, a)) {
        return v.clone();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let base = BigInt::from(a);
    for e in divisors(d) {
        let term = num_traits::pow(base.clone(), e as usize) - 1;
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let v = num / den;
    value_memo().lock().unwrap().insert((d, a), v.clone());
    v
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (2..=n as u64).filter(|&k| sieve[k as usize]).collect()
}

/// Every `d` with `φ(d) ≤ max_degree`, in increasing order.
///
/// Enumerates by prime factorization: a prime `p | d` forces `p - 1 ≤ φ(d)`.
/// The result coincides with filtering `d ≤ 3·max_degree²` by totient, since
/// `φ(d) ≥ √(d/2)`.
pub fn indices_with_totient_at_most(max_degree: u64) -> Vec<u64> {
    fn walk(primes: &[u64], start: usize, d: u64, phi: u64, bound: u64, out: &mut Vec<u64>) {
        out.push(d);
        for (j, &p) in primes.iter().enumerate().skip(start) {
            if phi * (p - 1) > bound {
                break;
            }
            let mut dp = d * p;
            let mut phip = phi * (p - 1);
            while phip <= bound {
                walk(primes, j + 1, dp, phip, bound, out);
                dp *= p;
                phip *= p;
            }
        }
    }

    if max_degree == 0 {
        return Vec::new();
    }
    let primes = primes_up_to(max_degree + 1);
    let mut out = Vec::new();
    walk(&primes, 0, 1, 1, max_degree, &mut out);
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic(105);
        assert_eq!(p.degree(), 48);
        assert!(p.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn values_agree_with_polynomial_evaluation() {
        for d in 1..=40 {
            for a in [2u64, 3, 7] {
                assert_eq!(cyclotomic_value(d, a), cyclotomic(d).eval(&BigInt::from(a)), "d={d} a={a}");
            }
        }
    }

    #[test]
    fn totient_enumeration_matches_the_quadratic_bound() {
        for deg in 1..=30u64 {
            let brute: Vec<u64> = (1..=3 * deg * deg).filter(|&d| totient(d) <= deg).collect();
            assert_eq!(indices_with_totient_at_most(deg), brute, "deg={deg}");
        }
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(totient(36), 12);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(1), 1);
    }
}
