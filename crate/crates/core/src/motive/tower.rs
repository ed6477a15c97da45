//! The stabilizer-tower recursion expressing `{B Spin_n}` through the atoms
//! `{BΔ_m}`, and the triangular solver for those atoms.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::lefschetz::LefschetzClass;

use super::classes::class_spin;
use super::{MotiveError, MotiveExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecursionKind {
    Spin,
    Pin,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RecursionKey {
    pub kind: RecursionKind,
    pub n: u32,
    /// Only meaningful for [`RecursionKind::G`].
    pub r: u32,
}

fn lm1(n: u32) -> LefschetzClass {
    LefschetzClass::l_pow_minus_one(n as u64)
}

/// Memo table for the three mutually recursive families.
#[derive(Default)]
pub struct Tower {
    memo: HashMap<RecursionKey, MotiveExpr>,
}

impl Tower {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `(L^k - 1)^{-1} (L^shift · first + (L - 1) · second)`.
    fn step(k: u32, shift: i64, first: &MotiveExpr, second: &MotiveExpr) -> MotiveExpr {
        let inner = &first.scale(&LefschetzClass::l_pow(shift)) + &second.scale(&lm1(1));
        inner.scale(&lm1(k).inv().expect("L^k-1 is a unit"))
    }

    /// `{B Spin_n}` for `n ≥ 1`.
    pub fn bspin(&mut self, n: u32) -> Result<MotiveExpr, MotiveError> {
        match n {
            0 => Err(MotiveError::Domain(format!("BSpin({n}) needs n >= 1"))),
            1 => Ok(MotiveExpr::one()),
            2 => Ok(MotiveExpr::scalar(lm1(1).inv().expect("L-1 is a unit"))),
            _ => {
                let key = RecursionKey { kind: RecursionKind::Spin, n, r: 0 };
                if let Some(e) = self.memo.get(&key) {
                    return Ok(e.clone());
                }
                let a = self.bspin(n - 2)?;
                let b = self.bpin(n - 1)?;
                let e = Self::step(n, 2 - n as i64, &a, &b);
                self.memo.insert(key, e.clone());
                Ok(e)
            }
        }
    }

    /// `{B Pin_n}` for `n ≥ 0`.
    pub fn bpin(&mut self, n: u32) -> Result<MotiveExpr, MotiveError> {
        if n <= 1 {
            return Ok(MotiveExpr::one());
        }
        let key = RecursionKey { kind: RecursionKind::Pin, n, r: 0 };
        if let Some(e) = self.memo.get(&key) {
            return Ok(e.clone());
        }
        let a = self.bpin(n - 2)?;
        let b = self.bg(n, 1)?;
        let e = Self::step(n, 2 - n as i64, &a, &b);
        self.memo.insert(key, e.clone());
        Ok(e)
    }

    /// `{B G_{n,r}}` for `1 ≤ r ≤ n`. Collapses to the atom `BΔ_n` once
    /// `r ≥ n - 1`; `G_{1,1} = Δ_1 ≅ μ_4` contributes the constant 1.
    pub fn bg(&mut self, n: u32, r: u32) -> Result<MotiveExpr, MotiveError> {
        if r == 0 || r > n {
            return Err(MotiveError::Domain(format!("BG({n},{r}) needs 1 <= r <= n")));
        }
        if n == 1 {
            return Ok(MotiveExpr::one());
        }
        if r + 1 >= n {
            return Ok(MotiveExpr::atom(n));
        }
        let key = RecursionKey { kind: RecursionKind::G, n, r };
        if let Some(e) = self.memo.get(&key) {
            return Ok(e.clone());
        }
        let a = self.bg(n - 2, r)?;
        let b = self.bg(n, r + 1)?;
        let e = Self::step(n - r, r as i64 + 2 - n as i64, &a, &b);
        self.memo.insert(key, e.clone());
        Ok(e)
    }
}

fn global_tower() -> &'static Mutex<Tower> {
    static TOWER: OnceLock<Mutex<Tower>> = OnceLock::new();
    TOWER.get_or_init(|| Mutex::new(Tower::new()))
}

fn with_tower<T>(f: impl FnOnce(&mut Tower) -> T) -> T {
    let mut guard = global_tower().lock().unwrap_or_else(|p| p.into_inner());
    f(&mut guard)
}

pub fn bspin(n: u32) -> Result<MotiveExpr, MotiveError> {
    with_tower(|t| t.bspin(n))
}

pub fn bpin(n: u32) -> Result<MotiveExpr, MotiveError> {
    with_tower(|t| t.bpin(n))
}

pub fn bg(n: u32, r: u32) -> Result<MotiveExpr, MotiveError> {
    with_tower(|t| t.bg(n, r))
}

/// The coefficient of `BΔ_{n-1}` in `{B Spin_n}`.
pub fn leading_delta_coeff(n: u32) -> Result<LefschetzClass, MotiveError> {
    if n < 3 {
        return Err(MotiveError::Domain(format!("leading coefficient needs n >= 3, got {n}")));
    }
    Ok(bspin(n)?.coeff(n - 1))
}

/// `(L - 1)^{n-1} / ∏_{i=2}^{n} (L^i - 1)`.
pub fn leading_coeff_closed_form(n: u32) -> LefschetzClass {
    let num = lm1(1).pow(n as i64 - 1).expect("nonnegative power");
    (2..=n).fold(num, |acc, i| &acc * &lm1(i).inv().expect("L^i-1 is a unit"))
}

pub fn substitute_deltas(e: &MotiveExpr, values: &BTreeMap<u32, LefschetzClass>) -> Result<LefschetzClass, MotiveError> {
    e.substitute(values)
}

/// The all-ones assignment on the support of `e`.
pub fn all_ones(e: &MotiveExpr) -> BTreeMap<u32, LefschetzClass> {
    e.support().into_iter().map(|m| (m, LefschetzClass::one())).collect()
}

/// Solve `{B Spin_n} = {Spin_n}^{-1}` for `n = 3..=max_n` against the real
/// class formulas. See [`solve_deltas_with`].
pub fn solve_deltas(max_n: u32) -> Result<BTreeMap<u32, LefschetzClass>, MotiveError> {
    solve_deltas_with(max_n, |n| class_spin(n))
}

/// Solve for the atoms one equation at a time, using `class_of(n)` as the
/// class of `Spin_n`.
///
/// At step `n` every atom except `BΔ_{n-1}` is already known, and its
/// coefficient is a unit, so the equation has a unique solution. An atom is
/// the class of a finite group, and such a class lying in the Lefschetz ring
/// is forced to be 1; a solved value other than 1 therefore contradicts the
/// equations that were assumed, and is reported as [`MotiveError::Inconsistent`].
pub fn solve_deltas_with(
    max_n: u32,
    class_of: impl Fn(u32) -> LefschetzClass,
) -> Result<BTreeMap<u32, LefschetzClass>, MotiveError> {
    if !(3..=8).contains(&max_n) {
        return Err(MotiveError::Domain(format!("solve_deltas needs 3 <= max_n <= 8, got {max_n}")));
    }
    let mut solved: BTreeMap<u32, LefschetzClass> = BTreeMap::new();
    for n in 3..=max_n {
        let target = class_of(n).inv()?;
        let reduced = bspin(n)?.substitute_partial(&solved);
        let unknowns = reduced.support();
        match unknowns.as_slice() {
            [] => {
                if reduced.scalar_part() != &target {
                    return Err(MotiveError::Inconsistent {
                        n,
                        detail: format!("{} != {}", reduced.scalar_part(), target),
                    });
                }
            }
            [m] => {
                let c = reduced.coeff(*m);
                let value = &(&target - reduced.scalar_part()) * &c.inv()?;
                if !value.is_one() {
                    return Err(MotiveError::Inconsistent {
                        n,
                        detail: format!("BDelta({m}) = {value}, but a finite-group class in the Lefschetz ring must be 1"),
                    });
                }
                solved.insert(*m, value);
            }
            many => {
                return Err(MotiveError::Inconsistent {
                    n,
                    detail: format!("equation has several unknown atoms {many:?}"),
                });
            }
        }
    }
    Ok(solved)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm1_inv(n: u32) -> LefschetzClass {
        lm1(n).inv().unwrap()
    }

    #[test]
    fn base_cases() {
        let mut t = Tower::new();
        assert_eq!(t.bspin(1).unwrap(), MotiveExpr::one());
        assert_eq!(t.bspin(2).unwrap(), MotiveExpr::scalar(lm1_inv(1)));
        assert_eq!(t.bpin(0).unwrap(), MotiveExpr::one());
        assert_eq!(t.bpin(1).unwrap(), MotiveExpr::one());
        assert!(t.bspin(0).is_err());
        assert!(t.bg(3, 4).is_err());
        assert!(t.bg(3, 0).is_err());
    }

    #[test]
    fn bpin_two() {
        let mut t = Tower::new();
        let expected = (&MotiveExpr::one() + &MotiveExpr::atom(2).scale(&lm1(1))).scale(&lm1_inv(2));
        assert_eq!(t.bpin(2).unwrap(), expected);
    }

    #[test]
    fn bg_collapse_and_one_step() {
        let mut t = Tower::new();
        assert_eq!(t.bg(5, 4).unwrap(), MotiveExpr::atom(5));
        assert_eq!(t.bg(5, 5).unwrap(), MotiveExpr::atom(5));
        let expected = (&MotiveExpr::atom(2) + &MotiveExpr::atom(4).scale(&lm1(1))).scale(&lm1_inv(2));
        assert_eq!(t.bg(4, 2).unwrap(), expected);
    }

    #[test]
    fn bspin_three_by_hand() {
        // (L^3-1)^-1 (L^-1 + (L-1) bpin(2)) with BΔ_2 = 1 is L^-1 (L^2-1)^-1.
        let mut t = Tower::new();
        let e = t.bspin(3).unwrap();
        assert_eq!(e.support(), vec![2]);
        let v = e.substitute(&all_ones(&e)).unwrap();
        assert_eq!(v, &LefschetzClass::l_pow(-1) * &lm1_inv(2));
    }

    #[test]
    fn cold_and_warm_caches_agree() {
        let mut cold = Tower::new();
        let a = cold.bspin(9).unwrap();
        assert_eq!(a, bspin(9).unwrap());
        assert!(!cold.is_empty());
    }

    #[test]
    fn solver_small_cases() {
        let s = solve_deltas(3).unwrap();
        assert_eq!(s, BTreeMap::from([(2, LefschetzClass::one())]));
        assert!(solve_deltas(9).is_err());
        let corrupted = solve_deltas_with(6, |n| {
            if n == 5 {
                &class_spin(5) * &LefschetzClass::l()
            } else {
                class_spin(n)
            }
        });
        assert!(matches!(corrupted, Err(MotiveError::Inconsistent { n: 5, .. })));
    }
}
