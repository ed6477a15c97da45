//! The Clifford algebra `C_n` on `e_1..e_n` with `e_i² = -1` and
//! `e_i e_j = -e_j e_i`, over the Gaussian rationals.
//!
//! Basis blades `e_S` are indexed by bitmasks: bit `i-1` stands for `e_i`,
//! and `e_S` is the product of its generators in increasing order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussRat;

/// Largest supported dimension.
pub const MAX_DIM: u32 = 16;

pub type Blade = u32;

/// Product of basis blades: `e_S e_T = sign · e_{S △ T}`.
///
/// The sign counts the transpositions needed to sort the concatenated index
/// sequence, times `(-1)` for each repeated generator since `e_i² = -1`.
pub fn blade_mul(s: Blade, t: Blade) -> (i8, Blade) {
    let mut crossings = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        // generators of S with a larger index than this generator of T
        crossings += (s >> bit >> 1).count_ones();
    }
    crossings += (s & t).count_ones();
    let sign = if crossings % 2 == 0 { 1 } else { -1 };
    (sign, s ^ t)
}

pub fn grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Indices (1-based) of the generators in a blade.
pub fn blade_indices(b: Blade) -> Vec<u32> {
    (0..32).filter(|i| b >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn blade_from_indices(indices: &[u32]) -> Blade {
    indices.iter().fold(0, |acc, &i| {
        assert!((1..=MAX_DIM).contains(&i), "generator index out of range");
        acc | 1 << (i - 1)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    n: u32,
    terms: BTreeMap<Blade, GaussRat>,
}

impl CliffordElement {
    pub fn zero(n: u32) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        CliffordElement { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: u32, c: GaussRat) -> Self {
        Self::blade(n, 0, c)
    }

    pub fn one(n: u32) -> Self {
        Self::scalar(n, GaussRat::one())
    }

    pub fn blade(n: u32, b: Blade, c: GaussRat) -> Self {
        let mut out = Self::zero(n);
        assert!(b >> n == 0, "blade outside C_{n}");
        if !c.is_zero() {
            out.terms.insert(b, c);
        }
        out
    }

    /// The generator `e_i`.
    pub fn e(n: u32, i: u32) -> Self {
        Self::blade(n, blade_from_indices(&[i]), GaussRat::one())
    }

    /// `Σ v_i e_i`.
    pub fn vector(v: &[GaussRat]) -> Self {
        let n = v.len() as u32;
        let mut out = Self::zero(n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(1 << i, c.clone());
            }
        }
        out
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Blade, GaussRat> {
        &self.terms
    }

    pub fn coeff(&self, b: Blade) -> GaussRat {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    fn insert_add(&mut self, b: Blade, c: GaussRat) {
        let entry = self.terms.entry(b).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (&b, x) in &self.terms {
            out.terms.insert(b, x * c);
        }
        out
    }

    /// Keep only the blades of grade `g`.
    pub fn grade_part(&self, g: u32) -> Self {
        CliffordElement {
            n: self.n,
            terms: self.terms.iter().filter(|(b, _)| grade(**b) == g).map(|(&b, c)| (b, c.clone())).collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| grade(*b) % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| grade(*b) % 2 == 1)
    }

    /// True when every term has grade 1.
    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| grade(*b) == 1)
    }

    /// Coefficients of the grade-1 part, `v_1..v_n`.
    pub fn vector_coords(&self) -> Vec<GaussRat> {
        (0..self.n).map(|i| self.coeff(1 << i)).collect()
    }

    fn map_grades(&self, sign: impl Fn(u32) -> bool) -> Self {
        CliffordElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(&b, c)| (b, if sign(grade(b)) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// The grade involution ε, `ε(v) = -v` on vectors.
    pub fn epsilon(&self) -> Self {
        self.map_grades(|g| g % 2 == 1)
    }

    /// The reversal `(a∧b)ᵗ = bᵗ∧aᵗ`.
    pub fn transpose(&self) -> Self {
        self.map_grades(|g| (g * g.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Clifford conjugation `ā = ε(aᵗ)`.
    pub fn bar(&self) -> Self {
        self.transpose().epsilon()
    }

    /// Embed into `C_m` for `m ≥ n` along `e_i ↦ e_i`.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m >= self.n && m <= MAX_DIM);
        CliffordElement { n: m, terms: self.terms.clone() }
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (&b, c) in &rhs.terms {
            out.insert_add(b, c.clone());
        }
        out
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale(&GaussRat::int(-1))
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self + &(-rhs)
    }
}

/// Coefficients rescaled to Gaussian integers by a common denominator.
fn integral_terms(x: &CliffordElement) -> (BigInt, Vec<(Blade, BigInt, BigInt)>) {
    let den = x
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()).lcm(c.im.denom()));
    let terms = x
        .terms
        .iter()
        .map(|(&b, c)| {
            let re = c.re.numer() * (&den / c.re.denom());
            let im = c.im.numer() * (&den / c.im.denom());
            (b, re, im)
        })
        .collect();
    (den, terms)
}

impl CliffordElement {
    /// The product `self · rhs` restricted to blades accepted by `keep`.
    fn mul_filtered(&self, rhs: &CliffordElement, keep: impl Fn(Blade) -> bool) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        // Multiply over ℤ[i] and reduce once per output blade.
        let (da, ta) = integral_terms(self);
        let (db, tb) = integral_terms(rhs);
        let mut acc: BTreeMap<Blade, (BigInt, BigInt)> = BTreeMap::new();
        for (a, xr, xi) in &ta {
            for (b, yr, yi) in &tb {
                if !keep(a ^ b) {
                    continue;
                }
                let (sign, c) = blade_mul(*a, *b);
                let re = xr * yr - xi * yi;
                let im = xr * yi + xi * yr;
                let entry = acc.entry(c).or_default();
                if sign > 0 {
                    entry.0 += re;
                    entry.1 += im;
                } else {
                    entry.0 -= re;
                    entry.1 -= im;
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, (re, im))| !(re.is_zero() && im.is_zero()))
            .map(|(b, (re, im))| {
                let c = GaussRat::new(BigRational::new(re, den.clone()), BigRational::new(im, den.clone()));
                (b, c)
            })
            .collect();
        CliffordElement { n: self.n, terms }
    }

    /// The grade-`g` part of `self · rhs`, without forming the other grades.
    pub fn mul_grade(&self, rhs: &CliffordElement, g: u32) -> CliffordElement {
        self.mul_filtered(rhs, |b| grade(b) == g)
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        self.mul_filtered(rhs, |_| true)
    }
}

pub fn product<'a>(n: u32, factors: impl IntoIterator<Item = &'a CliffordElement>) -> CliffordElement {
    factors.into_iter().fold(CliffordElement::one(n), |acc, x| &acc * x)
}

/// Text form `a + b*e1 + c*e1e2 + ...`.
impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&b, c)| {
                if b == 0 {
                    return c.to_string();
                }
                let name: String = blade_indices(b).iter().map(|i| format!("e{i}")).collect();
                let cs = c.to_string();
                if c.is_one() {
                    name
                } else if !c.re.is_zero() && !c.im.is_zero() {
                    format!("({cs})*{name}")
                } else {
                    format!("{cs}*{name}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_relations() {
        assert_eq!(blade_mul(0b1, 0b1), (-1, 0));
        let (s12, b12) = blade_mul(0b01, 0b10);
        let (s21, b21) = blade_mul(0b10, 0b01);
        assert_eq!(b12, 0b11);
        assert_eq!(b21, 0b11);
        assert_eq!(s12, -s21);
        assert_eq!(blade_mul(0, 0b101), (1, 0b101));
    }

    #[test]
    fn associativity_exhaustive_small() {
        for a in 0..16u32 {
            for b in 0..16u32 {
                for c in 0..16u32 {
                    let (s1, ab) = blade_mul(a, b);
                    let (s2, ab_c) = blade_mul(ab, c);
                    let (s3, bc) = blade_mul(b, c);
                    let (s4, a_bc) = blade_mul(a, bc);
                    assert_eq!(ab_c, a_bc);
                    assert_eq!(s1 * s2, s3 * s4, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn involutions_on_small_examples() {
        let e12 = &CliffordElement::e(2, 1) * &CliffordElement::e(2, 2);
        assert_eq!(e12.epsilon(), e12);
        assert_eq!(e12.transpose(), -&e12);
        assert_eq!(e12.transpose(), &CliffordElement::e(2, 2) * &CliffordElement::e(2, 1));
        let x = &CliffordElement::one(2) + &CliffordElement::e(2, 1);
        assert_eq!(x.bar(), &CliffordElement::one(2) - &CliffordElement::e(2, 1));
        assert_eq!(CliffordElement::one(3).epsilon(), CliffordElement::one(3));
    }

    #[test]
    fn display() {
        let x = &CliffordElement::scalar(3, GaussRat::ratio(1, 2))
            + &(&CliffordElement::e(3, 1) * &CliffordElement::e(3, 3)).scale(&GaussRat::from_ints(1, 1));
        assert_eq!(x.to_string(), "1/2 + (1+i)*e1e3");
        assert_eq!(CliffordElement::e(2, 2).scale(&GaussRat::int(-2)).to_string(), "-2*e2");
    }
}
