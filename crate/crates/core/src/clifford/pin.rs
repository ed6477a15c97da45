//! Membership in `Pin_n` / `Spin_n` and the projection `ρ_n: Pin_n → O_n`.

use super::algebra::CliffordElement;
use super::gaussian::GaussRat;
use super::matrix::Matrix;
use super::CliffordError;

/// `α` is homogeneous, `αᾱ = 1`, and `α e_j ᾱ` is a vector for every `j`.
pub fn is_pin(a: &CliffordElement) -> bool {
    if a.is_zero() || !(a.is_even() || a.is_odd()) {
        return false;
    }
    let abar = a.bar();
    if !(a * &abar).is_one() {
        return false;
    }
    (1..=a.dim()).all(|j| {
        let img = &(a * &CliffordElement::e(a.dim(), j)) * &abar;
        img.is_vector()
    })
}

pub fn is_spin(a: &CliffordElement) -> bool {
    a.is_even() && is_pin(a)
}

/// `ρ(α)v = ε(α) v ᾱ`, as the matrix whose `j`-th column is `ρ(α)e_j`.
pub fn rho(a: &CliffordElement) -> Result<Matrix, CliffordError> {
    if !is_pin(a) {
        return Err(CliffordError::NotPin(a.to_string()));
    }
    Ok(rho_unchecked(a))
}

/// `ρ` without the membership test, for callers that already know `a ∈ Pin_n`.
pub fn rho_unchecked(a: &CliffordElement) -> Matrix {
    let n = a.dim();
    let eps = a.epsilon();
    let abar = a.bar();
    let cols: Vec<Vec<GaussRat>> = (1..=n)
        .map(|j| (&eps * &CliffordElement::e(n, j)).mul_grade(&abar, 1).vector_coords())
        .collect();
    Matrix::from_columns(&cols)
}

/// `Mᵀ M = I`, i.e. `M` preserves `q = -Σ x_i²`.
pub fn is_orthogonal(m: &Matrix) -> bool {
    &m.transpose() * m == Matrix::identity(m.size())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let e1 = CliffordElement::e(3, 1);
        assert!(is_pin(&e1));
        assert!(!is_spin(&e1));
        let e12 = &e1 * &CliffordElement::e(3, 2);
        assert!(is_spin(&e12));
        let x = &CliffordElement::one(3) + &e1;
        assert!(!is_pin(&x));
    }

    #[test]
    fn rho_examples() {
        let n = 4;
        let mut reflection = vec![GaussRat::one(); n as usize];
        reflection[0] = GaussRat::int(-1);
        assert_eq!(rho(&CliffordElement::e(n, 1)).unwrap(), Matrix::diagonal(&reflection));
        assert_eq!(rho(&CliffordElement::scalar(n, GaussRat::int(-1))).unwrap(), Matrix::identity(n as usize));
        let e12 = &CliffordElement::e(n, 1) * &CliffordElement::e(n, 2);
        let mut d = vec![GaussRat::one(); n as usize];
        d[0] = GaussRat::int(-1);
        d[1] = GaussRat::int(-1);
        assert_eq!(rho(&e12).unwrap(), Matrix::diagonal(&d));
        assert!(rho(&(&CliffordElement::one(n) + &CliffordElement::e(n, 1))).is_err());
    }
}
