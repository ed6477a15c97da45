//! Formal linear combinations `scalar + Σ c_m · BΔ_m`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::lefschetz::LefschetzClass;

use super::MotiveError;

/// A class in the Lefschetz ring plus coefficients on the formal atoms
/// `BΔ_m`. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MotiveExpr {
    scalar: LefschetzClass,
    atoms: BTreeMap<u32, LefschetzClass>,
}

/// Tree form of a [`MotiveExpr`] for machine-readable output.
#[derive(Clone, Debug, Serialize)]
pub struct MotiveTree {
    pub scalar: String,
    pub atoms: Vec<AtomTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AtomTerm {
    pub m: u32,
    pub coeff: String,
}

impl MotiveExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: LefschetzClass) -> Self {
        MotiveExpr {
            scalar: c,
            atoms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(LefschetzClass::one())
    }

    /// The atom `BΔ_m` with coefficient 1.
    pub fn atom(m: u32) -> Self {
        assert!(m >= 1, "atom indices start at 1");
        MotiveExpr {
            scalar: LefschetzClass::zero(),
            atoms: BTreeMap::from([(m, LefschetzClass::one())]),
        }
    }

    pub fn scalar_part(&self) -> &LefschetzClass {
        &self.scalar
    }

    pub fn atoms(&self) -> &BTreeMap<u32, LefschetzClass> {
        &self.atoms
    }

    pub fn coeff(&self, m: u32) -> LefschetzClass {
        self.atoms.get(&m).cloned().unwrap_or_else(LefschetzClass::zero)
    }

    /// Indices `m` with a nonzero coefficient.
    pub fn support(&self) -> Vec<u32> {
        self.atoms.keys().copied().collect()
    }

    pub fn is_scalar(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn as_scalar(&self) -> Option<&LefschetzClass> {
        self.is_scalar().then_some(&self.scalar)
    }

    pub fn scale(&self, c: &LefschetzClass) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MotiveExpr {
            scalar: &self.scalar * c,
            atoms: self.atoms.iter().map(|(&m, a)| (m, a * c)).collect(),
        }
    }

    /// Product of two expressions; at least one factor must be atom-free,
    /// since products of atoms are not part of the linear span.
    pub fn mul(&self, rhs: &Self) -> Result<Self, MotiveError> {
        if let Some(c) = rhs.as_scalar() {
            Ok(self.scale(c))
        } else if let Some(c) = self.as_scalar() {
            Ok(rhs.scale(c))
        } else {
            Err(MotiveError::NonLinear)
        }
    }

    /// Replace atoms by classes. Every atom in the support must be covered.
    pub fn substitute(&self, values: &BTreeMap<u32, LefschetzClass>) -> Result<LefschetzClass, MotiveError> {
        let missing: Vec<u32> = self.atoms.keys().filter(|m| !values.contains_key(m)).copied().collect();
        if !missing.is_empty() {
            return Err(MotiveError::MissingAtom(missing));
        }
        Ok(self
            .atoms
            .iter()
            .fold(self.scalar.clone(), |acc, (m, c)| &acc + &(c * &values[m])))
    }

    /// Substitute the atoms present in `values` and keep the rest symbolic.
    pub fn substitute_partial(&self, values: &BTreeMap<u32, LefschetzClass>) -> Self {
        let mut out = MotiveExpr::scalar(self.scalar.clone());
        for (m, c) in &self.atoms {
            match values.get(m) {
                Some(v) => out.scalar = &out.scalar + &(c * v),
                None => {
                    out.atoms.insert(*m, c.clone());
                }
            }
        }
        out
    }

    pub fn to_tree(&self) -> MotiveTree {
        MotiveTree {
            scalar: self.scalar.to_string(),
            atoms: self
                .atoms
                .iter()
                .map(|(&m, c)| AtomTerm { m, coeff: c.to_string() })
                .collect(),
        }
    }
}

impl From<LefschetzClass> for MotiveExpr {
    fn from(c: LefschetzClass) -> Self {
        Self::scalar(c)
    }
}

impl Add for &MotiveExpr {
    type Output = MotiveExpr;

    fn add(self, rhs: &MotiveExpr) -> MotiveExpr {
        let mut atoms = self.atoms.clone();
        for (&m, c) in &rhs.atoms {
            let sum = match atoms.get(&m) {
                Some(a) => a + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                atoms.remove(&m);
            } else {
                atoms.insert(m, sum);
            }
        }
        MotiveExpr {
            scalar: &self.scalar + &rhs.scalar,
            atoms,
        }
    }
}

impl Neg for &MotiveExpr {
    type Output = MotiveExpr;

    fn neg(self) -> MotiveExpr {
        MotiveExpr {
            scalar: -&self.scalar,
            atoms: self.atoms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &MotiveExpr {
    type Output = MotiveExpr;

    fn sub(self, rhs: &MotiveExpr) -> MotiveExpr {
        self + &(-rhs)
    }
}

/// Renders as `(<class>) + (<class>)*BDelta(m) + ...`, which the expression
/// parser reads back to an equal value.
impl fmt::Display for MotiveExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "{}", self.scalar);
        }
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(format!("({})", self.scalar));
        }
        for (m, c) in &self.atoms {
            if c.is_one() {
                parts.push(format!("BDelta({m})"));
            } else {
                parts.push(format!("({c})*BDelta({m})"));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_atoms() {
        let a = MotiveExpr::atom(3);
        let z = &a - &a;
        assert!(z.is_scalar());
        assert!(z.scalar_part().is_zero());
    }

    #[test]
    fn product_of_atoms_is_rejected() {
        assert_eq!(MotiveExpr::atom(2).mul(&MotiveExpr::atom(3)), Err(MotiveError::NonLinear));
        let l = MotiveExpr::scalar(LefschetzClass::l());
        assert_eq!(l.mul(&MotiveExpr::atom(2)).unwrap().coeff(2), LefschetzClass::l());
    }

    #[test]
    fn substitution_reports_missing_atoms() {
        let e = &MotiveExpr::atom(2) + &MotiveExpr::atom(5);
        let vals = BTreeMap::from([(2, LefschetzClass::one())]);
        assert_eq!(e.substitute(&vals), Err(MotiveError::MissingAtom(vec![5])));
        let partial = e.substitute_partial(&vals);
        assert_eq!(partial.support(), vec![5]);
        assert!(partial.scalar_part().is_one());
    }

    #[test]
    fn rendering() {
        assert_eq!(MotiveExpr::one().to_string(), "1");
        assert_eq!(MotiveExpr::zero().to_string(), "0");
        let e = &MotiveExpr::scalar(LefschetzClass::l()) + &MotiveExpr::atom(2).scale(&LefschetzClass::l_pow(-1));
        assert_eq!(e.to_string(), "(L) + (L^-1)*BDelta(2)");
    }
}
