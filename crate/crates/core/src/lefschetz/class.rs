//! Canonical classes in ℤ[L] localized at `L` and all `L^n - 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::cyclotomic::{cyclotomic, cyclotomic_value, divisors, indices_with_totient_at_most, totient};
use super::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a unit in the localized ring")]
    NotAUnit(String),
    #[error("attempted to invert zero")]
    ZeroInverse,
}

/// An element of ℤ[L] localized at `L` and every `L^n - 1`, kept in the
/// unique form `core · L^l_exp · ∏ Φ_d^{m_d}`.
///
/// `core` has nonzero constant term and no cyclotomic factor, so two classes
/// are equal in the ring exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LefschetzClass {
    core: IntPoly,
    l_exp: i64,
    cyc_exps: BTreeMap<u64, i64>,
}

impl LefschetzClass {
    pub fn zero() -> Self {
        LefschetzClass {
            core: IntPoly::zero(),
            l_exp: 0,
            cyc_exps: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::normalize(IntPoly::constant(n), 0, BTreeMap::new())
    }

    /// The Lefschetz motive itself.
    pub fn l() -> Self {
        Self::l_pow(1)
    }

    pub fn l_pow(k: i64) -> Self {
        LefschetzClass {
            core: IntPoly::one(),
            l_exp: k,
            cyc_exps: BTreeMap::new(),
        }
    }

    /// Φ_d as a class.
    pub fn cyclotomic(d: u64) -> Self {
        assert!(d >= 1);
        LefschetzClass {
            core: IntPoly::one(),
            l_exp: 0,
            cyc_exps: BTreeMap::from([(d, 1)]),
        }
    }

    /// `L^n - 1 = ∏_{d | n} Φ_d`.
    pub fn l_pow_minus_one(n: u64) -> Self {
        assert!(n >= 1);
        LefschetzClass {
            core: IntPoly::one(),
            l_exp: 0,
            cyc_exps: divisors(n).into_iter().map(|d| (d, 1)).collect(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::normalize(p, 0, BTreeMap::new())
    }

    /// Bring `core · L^l_exp · ∏ Φ_d^{m_d}` into canonical form.
    ///
    /// Powers of `L` are pulled out of `core`, then every Φ_d with
    /// `φ(d) ≤ deg(core)` is trial-divided out. Each candidate first has to
    /// pass `Φ_d(a) | core(a)` at `a = 2, 3` before a polynomial division is
    /// attempted.
    pub fn normalize(core: IntPoly, l_exp: i64, cyc_exps: BTreeMap<u64, i64>) -> Self {
        if core.is_zero() {
            return Self::zero();
        }
        let shift = core.trailing_zeros();
        let mut core = core.shift_down(shift);
        let l_exp = l_exp + shift as i64;
        let mut cyc_exps = cyc_exps;

        if core.degree() > 0 {
            let probes = [2u64, 3];
            let mut probe_vals: Vec<BigInt> = probes.iter().map(|&a| core.eval(&BigInt::from(a))).collect();
            for d in indices_with_totient_at_most(core.degree() as u64) {
                loop {
                    if totient(d) as usize > core.degree() {
                        break;
                    }
                    let plausible = probes.iter().zip(&probe_vals).all(|(&a, v)| {
                        v.is_zero() || (v % cyclotomic_value(d, a)).is_zero()
                    });
                    if !plausible {
                        break;
                    }
                    match core.exact_div(&cyclotomic(d)) {
                        Some(q) => {
                            core = q;
                            *cyc_exps.entry(d).or_insert(0) += 1;
                            probe_vals = probes.iter().map(|&a| core.eval(&BigInt::from(a))).collect();
                        }
                        None => break,
                    }
                }
            }
        }
        cyc_exps.retain(|_, m| *m != 0);
        LefschetzClass { core, l_exp, cyc_exps }
    }

    pub fn core(&self) -> &IntPoly {
        &self.core
    }

    pub fn l_exp(&self) -> i64 {
        self.l_exp
    }

    pub fn cyc_exps(&self) -> &BTreeMap<u64, i64> {
        &self.cyc_exps
    }

    pub fn is_zero(&self) -> bool {
        self.core.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.l_exp == 0 && self.cyc_exps.is_empty() && self.core == IntPoly::one()
    }

    /// Units of the localized ring are exactly `±L^a ∏ Φ_d^{m_d}`.
    pub fn is_unit(&self) -> bool {
        self.core.is_unit()
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroInverse);
        }
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        Ok(LefschetzClass {
            core: self.core.clone(),
            l_exp: -self.l_exp,
            cyc_exps: self.cyc_exps.iter().map(|(&d, &m)| (d, -m)).collect(),
        })
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, k: i64) -> Result<Self, RingError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if k == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let k32 = u32::try_from(k).map_err(|_| RingError::NotAUnit(format!("exponent {k} out of range")))?;
        Ok(LefschetzClass {
            core: self.core.pow(k32),
            l_exp: self.l_exp * k,
            cyc_exps: self.cyc_exps.iter().map(|(&d, &m)| (d, m * k)).collect(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(self * &rhs.inv()?)
    }

    /// Write the class as `numerator / denominator` with both in ℤ[L].
    pub fn as_fraction(&self) -> (IntPoly, IntPoly) {
        let mut num = self.core.clone();
        let mut den = IntPoly::one();
        if self.l_exp >= 0 {
            num = num.shift_up(self.l_exp as usize);
        } else {
            den = den.shift_up((-self.l_exp) as usize);
        }
        for (&d, &m) in &self.cyc_exps {
            let phi = cyclotomic(d).pow(m.unsigned_abs() as u32);
            if m > 0 {
                num = &num * &phi;
            } else {
                den = &den * &phi;
            }
        }
        (num, den)
    }

    /// Ring equality decided by cross-multiplying expanded fractions.
    ///
    /// Independent of canonical form; used to audit structural equality.
    pub fn eq_by_cross_multiplication(&self, other: &Self) -> bool {
        let (an, ad) = self.as_fraction();
        let (bn, bd) = other.as_fraction();
        &an * &bd == &bn * &ad
    }

    /// Specialize `L ↦ q`. Exact; `Φ_d(q) > 0` for `q ≥ 2`.
    pub fn eval_at(&self, q: u64) -> BigRational {
        assert!(q >= 2, "evaluation point must be at least 2");
        let qb = BigInt::from(q);
        let mut acc = BigRational::from_integer(self.core.eval(&qb));
        if acc.is_zero() {
            return acc;
        }
        let lq = BigRational::from_integer(qb.clone());
        acc *= num_traits::pow::Pow::pow(&lq, self.l_exp as i32);
        for (&d, &m) in &self.cyc_exps {
            let v = BigRational::from_integer(cyclotomic(d).eval(&qb));
            acc *= num_traits::pow::Pow::pow(&v, m as i32);
        }
        acc
    }

    /// Check the canonical-form invariants. Used by tests and debug assertions.
    pub fn is_canonical(&self) -> bool {
        if self.core.is_zero() {
            return self.l_exp == 0 && self.cyc_exps.is_empty();
        }
        if self.core.constant_term().is_zero() || self.cyc_exps.values().any(|&m| m == 0) {
            return false;
        }
        let deg = self.core.degree() as u64;
        indices_with_totient_at_most(deg)
            .into_iter()
            .all(|d| self.core.exact_div(&cyclotomic(d)).is_none())
    }
}

impl Default for LefschetzClass {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for LefschetzClass {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for &LefschetzClass {
    type Output = LefschetzClass;

    fn add(self, rhs: &LefschetzClass) -> LefschetzClass {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Factor out the common part L^l ∏ Φ_d^{min}; what remains of each
        // summand is a polynomial.
        let l = self.l_exp.min(rhs.l_exp);
        let mut common = BTreeMap::new();
        for d in self.cyc_exps.keys().chain(rhs.cyc_exps.keys()) {
            let a = self.cyc_exps.get(d).copied().unwrap_or(0);
            let b = rhs.cyc_exps.get(d).copied().unwrap_or(0);
            common.insert(*d, a.min(b));
        }
        let expand = |x: &LefschetzClass| -> IntPoly {
            let mut p = x.core.shift_up((x.l_exp - l) as usize);
            for (&d, &m) in &common {
                let extra = x.cyc_exps.get(&d).copied().unwrap_or(0) - m;
                if extra > 0 {
                    p = &p * &cyclotomic(d).pow(extra as u32);
                }
            }
            p
        };
        let sum = &expand(self) + &expand(rhs);
        LefschetzClass::normalize(sum, l, common)
    }
}

impl Neg for &LefschetzClass {
    type Output = LefschetzClass;

    fn neg(self) -> LefschetzClass {
        LefschetzClass {
            core: -&self.core,
            l_exp: self.l_exp,
            cyc_exps: self.cyc_exps.clone(),
        }
    }
}

impl Sub for &LefschetzClass {
    type Output = LefschetzClass;

    fn sub(self, rhs: &LefschetzClass) -> LefschetzClass {
        self + &(-rhs)
    }
}

impl Mul for &LefschetzClass {
    type Output = LefschetzClass;

    fn mul(self, rhs: &LefschetzClass) -> LefschetzClass {
        if self.is_zero() || rhs.is_zero() {
            return LefschetzClass::zero();
        }
        // Φ_d and L are irreducible, so a product of two cores free of them is
        // again free of them; no trial division is needed.
        let mut cyc_exps = self.cyc_exps.clone();
        for (&d, &m) in &rhs.cyc_exps {
            *cyc_exps.entry(d).or_insert(0) += m;
        }
        cyc_exps.retain(|_, m| *m != 0);
        let out = LefschetzClass {
            core: &self.core * &rhs.core,
            l_exp: self.l_exp + rhs.l_exp,
            cyc_exps,
        };
        debug_assert!(out.core.degree() > 12 || out.is_canonical());
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LefschetzClass {
            type Output = LefschetzClass;
            fn $method(self, rhs: LefschetzClass) -> LefschetzClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LefschetzClass> for LefschetzClass {
            type Output = LefschetzClass;
            fn $method(self, rhs: &LefschetzClass) -> LefschetzClass {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LefschetzClass {
    type Output = LefschetzClass;
    fn neg(self) -> LefschetzClass {
        -&self
    }
}

impl std::iter::Sum for LefschetzClass {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(LefschetzClass::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for LefschetzClass {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(LefschetzClass::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for LefschetzClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_class(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn l() -> LefschetzClass {
        LefschetzClass::l()
    }

    fn lm1(n: u64) -> LefschetzClass {
        LefschetzClass::l_pow_minus_one(n)
    }

    #[test]
    fn normalize_extracts_cyclotomic_factors() {
        let x = LefschetzClass::normalize(poly(&[-1, 0, 1]), 0, BTreeMap::new());
        assert_eq!(x.core(), &IntPoly::one());
        assert_eq!(x.l_exp(), 0);
        assert_eq!(x.cyc_exps(), &BTreeMap::from([(1, 1), (2, 1)]));
    }

    #[test]
    fn normalize_extracts_powers_of_l() {
        let x = LefschetzClass::normalize(poly(&[0, 0, 0, 2]), -1, BTreeMap::new());
        assert_eq!(x.core(), &poly(&[2]));
        assert_eq!(x.l_exp(), 2);
        assert!(x.cyc_exps().is_empty());
    }

    #[test]
    fn normalize_cancels_against_existing_exponents() {
        let x = LefschetzClass::normalize(IntPoly::x_pow_minus_one(6), 0, BTreeMap::from([(2, -1)]));
        assert!(x.core().is_unit());
        assert_eq!(x.cyc_exps(), &BTreeMap::from([(1, 1), (3, 1), (6, 1)]));
    }

    #[test]
    fn normalize_keeps_repeated_factors() {
        // (L-1)^3 (L+2)
        let p = &IntPoly::from_i64(&[-1, 1]).pow(3) * &poly(&[2, 1]);
        let x = LefschetzClass::from_poly(p);
        assert_eq!(x.core(), &poly(&[2, 1]));
        assert_eq!(x.cyc_exps(), &BTreeMap::from([(1, 3)]));
    }

    #[test]
    fn addition_examples() {
        let a = LefschetzClass::from_poly(poly(&[-1, 1]));
        let b = LefschetzClass::from_poly(poly(&[1, 1]));
        assert_eq!(&a + &b, LefschetzClass::from_poly(poly(&[0, 2])));

        // L^-1 + L/(L+1) = (L^2+L+1) / (L(L+1))
        let lhs = &LefschetzClass::l_pow(-1) + &(&l() * &LefschetzClass::cyclotomic(2).inv().unwrap());
        let rhs = &LefschetzClass::from_poly(poly(&[1, 1, 1]))
            * &(&LefschetzClass::l_pow(-1) * &LefschetzClass::cyclotomic(2).inv().unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.cyc_exps(), &BTreeMap::from([(2, -1), (3, 1)]));
    }

    #[test]
    fn multiplication_examples() {
        let a = lm1(1);
        assert!((&a * &a.inv().unwrap()).is_one());

        let g2 = &LefschetzClass::l_pow(6) * &(&lm1(2) * &lm1(6));
        let g2_inv = &LefschetzClass::l_pow(-6) * &(&lm1(6).inv().unwrap() * &lm1(2).inv().unwrap());
        assert!((&g2 * &g2_inv).is_one());

        assert_eq!(&LefschetzClass::l_pow(3) * &LefschetzClass::l_pow(-5), LefschetzClass::l_pow(-2));
    }

    #[test]
    fn inverse_examples() {
        let spin7 = &LefschetzClass::l_pow(9) * &(&lm1(2) * &(&lm1(4) * &lm1(6)));
        let expected = [LefschetzClass::l_pow(-9), lm1(2).inv().unwrap(), lm1(4).inv().unwrap(), lm1(6).inv().unwrap()]
            .into_iter()
            .product::<LefschetzClass>();
        assert_eq!(spin7.inv().unwrap(), expected);

        let phi6 = LefschetzClass::from_poly(poly(&[1, -1, 1]));
        assert!(phi6.inv().is_ok());

        let lp2 = LefschetzClass::from_poly(poly(&[2, 1]));
        assert!(matches!(lp2.inv(), Err(RingError::NotAUnit(_))));
        assert_eq!(LefschetzClass::zero().inv(), Err(RingError::ZeroInverse));
        // 2 is not a unit either
        assert!(LefschetzClass::integer(2).inv().is_err());
    }

    #[test]
    fn equality_examples() {
        // group.h chain: (L^4-1)^-1 (1 + L^-1 + (L-1)) = L^-1 (L^2-1)^-1
        let lhs = &lm1(4).inv().unwrap() * &(&(&LefschetzClass::one() + &LefschetzClass::l_pow(-1)) + &lm1(1));
        let rhs = &LefschetzClass::l_pow(-1) * &lm1(2).inv().unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.eq_by_cross_multiplication(&rhs));

        // 2L^-1 + (L-2)L^-1 = 1
        let two_over_l = &LefschetzClass::integer(2) * &LefschetzClass::l_pow(-1);
        let rest = &LefschetzClass::from_poly(poly(&[-2, 1])) * &LefschetzClass::l_pow(-1);
        assert!((&two_over_l + &rest).is_one());

        let zero_phi = &LefschetzClass::zero() * &lm1(1);
        assert_eq!(&l() + &zero_phi, l());
    }

    #[test]
    fn evaluation_examples() {
        // GL_2 = (L^2-1)(L^2-L); 48 invertible 2x2 matrices over F_3
        let gl2 = &lm1(2) * &LefschetzClass::from_poly(poly(&[0, -1, 1]));
        assert_eq!(gl2.eval_at(3), BigRational::from_integer(48.into()));
        // SL_2 = L(L^2-1); 120 at q = 5
        let sl2 = &l() * &lm1(2);
        assert_eq!(sl2.eval_at(5), BigRational::from_integer(120.into()));
        assert_eq!(LefschetzClass::one().eval_at(7), BigRational::one());
        let inv = sl2.inv().unwrap();
        assert_eq!(inv.eval_at(5), BigRational::new(1.into(), 120.into()));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(lm1(2).pow(-2).unwrap(), lm1(2).inv().unwrap().pow(2).unwrap());
        assert!(LefschetzClass::from_poly(poly(&[2, 1])).pow(-1).is_err());
        assert!(LefschetzClass::from_poly(poly(&[2, 1])).pow(3).unwrap().is_canonical());
    }

    #[test]
    fn subtraction_to_zero_is_canonical_zero() {
        let x = &lm1(6) * &LefschetzClass::l_pow(-3);
        let z = &x - &x;
        assert_eq!(z, LefschetzClass::zero());
        assert!(z.is_canonical());
    }
}
