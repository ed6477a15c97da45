//! Classes of split groups as elements of the Lefschetz ring.

use crate::lefschetz::LefschetzClass;

use super::MotiveExpr;

fn lm1(n: u64) -> LefschetzClass {
    LefschetzClass::l_pow_minus_one(n)
}

/// `{GL_n} = (L^n - 1)(L^n - L)⋯(L^n - L^{n-1})`.
pub fn class_gl(n: u32) -> LefschetzClass {
    assert!(n >= 1);
    let n = n as i64;
    (0..n)
        .map(|i| &LefschetzClass::l_pow(n) - &LefschetzClass::l_pow(i))
        .product()
}

/// `{SL_n} = {GL_n} / (L - 1)`, the determinant being an `SL_n`-torsor.
pub fn class_sl(n: u32) -> LefschetzClass {
    &class_gl(n) * &lm1(1).inv().expect("L-1 is a unit")
}

/// `{G_2} = L^6 (L^2 - 1)(L^6 - 1)`.
pub fn class_g2() -> LefschetzClass {
    [LefschetzClass::l_pow(6), lm1(2), lm1(6)].into_iter().product()
}

/// `{Spin_n}`: `L^{m²-m}(L^m-1)∏_{i<m}(L^{2i}-1)` for `n = 2m`, and
/// `L^{m²}∏_{i≤m}(L^{2i}-1)` for `n = 2m+1`.
pub fn class_spin(n: u32) -> LefschetzClass {
    assert!(n >= 2, "the class formula needs n >= 2");
    let m = (n / 2) as i64;
    if n % 2 == 0 {
        let head = &LefschetzClass::l_pow(m * m - m) * &lm1(m as u64);
        (1..m).map(|i| lm1(2 * i as u64)).fold(head, |acc, x| &acc * &x)
    } else {
        (1..=m)
            .map(|i| lm1(2 * i as u64))
            .fold(LefschetzClass::l_pow(m * m), |acc, x| &acc * &x)
    }
}

/// Solve the stratification equation `{BG}(L^n - 1) = {BG'} + (L - 1){BG''}`
/// for `{BG}`.
pub fn strat_equation(n: u32, null_cone_term: &MotiveExpr, quadric_term: &MotiveExpr) -> MotiveExpr {
    assert!(n >= 1);
    let sum = null_cone_term + &quadric_term.scale(&lm1(1));
    sum.scale(&lm1(n as u64).inv().expect("L^n-1 is a unit"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gl_and_sl() {
        assert_eq!(class_gl(1), lm1(1));
        assert_eq!(class_gl(2), &lm1(2) * &(&LefschetzClass::l_pow(2) - &LefschetzClass::l()));
        assert!(class_sl(1).is_one());
        assert_eq!(class_sl(2), &LefschetzClass::l() * &lm1(2));
        assert_eq!(class_sl(3), [LefschetzClass::l_pow(3), lm1(3), lm1(2)].into_iter().product());
    }

    #[test]
    fn spin_formulas() {
        assert_eq!(class_spin(2), lm1(1));
        assert_eq!(class_spin(4), &LefschetzClass::l_pow(2) * &lm1(2).pow(2).unwrap());
        let spin7: LefschetzClass = [LefschetzClass::l_pow(9), lm1(2), lm1(4), lm1(6)].into_iter().product();
        assert_eq!(class_spin(7), spin7);
    }

    #[test]
    fn g2_at_two() {
        assert_eq!(class_g2().eval_at(2), num_rational::BigRational::from_integer(12096.into()));
    }

    #[test]
    fn strat_equation_examples() {
        assert!(strat_equation(1, &MotiveExpr::zero(), &MotiveExpr::zero()).scalar_part().is_zero());
        let got = strat_equation(4, &MotiveExpr::one(), &MotiveExpr::scalar(LefschetzClass::l_pow(-1)));
        let expected = &lm1(4).inv().unwrap() * &(&LefschetzClass::one() + &(&LefschetzClass::l_pow(-1) * &lm1(1)));
        assert_eq!(got, MotiveExpr::scalar(expected));
    }
}
