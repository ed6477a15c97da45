//! Quadratic spaces and the unipotent stabilizer elements `φ_w`.

use super::gaussian::GaussRat;
use super::matrix::Matrix;
use super::CliffordError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadForm {
    /// `q(x) = -Σ x_i²`, the form of the Clifford algebra.
    NegSum,
    /// `q_n(x) = x_1x_2 + x_3x_4 + ⋯`, ending in `x_n²` when `n` is odd.
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadSpace {
    pub n: usize,
    pub form: QuadForm,
}

/// Plain dot product `Σ x_i y_i`, no conjugation.
pub fn dot(x: &[GaussRat], y: &[GaussRat]) -> GaussRat {
    x.iter().zip(y).fold(GaussRat::zero(), |mut acc, (a, b)| {
        acc += &(a * b);
        acc
    })
}

pub fn add_vec(x: &[GaussRat], y: &[GaussRat]) -> Vec<GaussRat> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vec(c: &GaussRat, x: &[GaussRat]) -> Vec<GaussRat> {
    x.iter().map(|a| c * a).collect()
}

pub fn basis_vector(n: usize, i: usize) -> Vec<GaussRat> {
    let mut v = vec![GaussRat::zero(); n];
    v[i - 1] = GaussRat::one();
    v
}

impl QuadSpace {
    pub fn new(n: usize, form: QuadForm) -> Self {
        QuadSpace { n, form }
    }

    pub fn q(&self, v: &[GaussRat]) -> GaussRat {
        assert_eq!(v.len(), self.n);
        match self.form {
            QuadForm::NegSum => -dot(v, v),
            QuadForm::Split => {
                let mut acc = GaussRat::zero();
                let mut i = 0;
                while i + 1 < self.n {
                    acc += &(&v[i] * &v[i + 1]);
                    i += 2;
                }
                if self.n % 2 == 1 {
                    acc += &(&v[self.n - 1] * &v[self.n - 1]);
                }
                acc
            }
        }
    }

    /// `h(v, w) = ½(q(v+w) - q(v) - q(w))`.
    pub fn h(&self, v: &[GaussRat], w: &[GaussRat]) -> GaussRat {
        let s = &(&self.q(&add_vec(v, w)) - &self.q(v)) - &self.q(w);
        &s * &GaussRat::ratio(1, 2)
    }

    /// `‖v‖² = Σ x_i²`.
    pub fn norm2(&self, v: &[GaussRat]) -> GaussRat {
        dot(v, v)
    }

    /// Gram matrix `G_ij = h(e_i, e_j)`.
    pub fn gram(&self) -> Matrix {
        let cols: Vec<Vec<GaussRat>> = (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.h(&basis_vector(self.n, i), &basis_vector(self.n, j))).collect())
            .collect();
        Matrix::from_columns(&cols)
    }

    /// `MᵀGM = G`.
    pub fn preserves(&self, m: &Matrix) -> bool {
        let g = self.gram();
        &(&m.transpose() * &g) * m == g
    }
}

/// The matrix of `φ_w` in a basis `(b_1, b_2, e_3, …, e_n)` with `b_1, b_2`
/// spanning the complement of `W = ⟨e_3..e_n⟩`:
/// `b_1 ↦ b_1`, `b_2 ↦ -q(w) b_1 + b_2 + w`, `x ↦ x - 2h(x, w) b_1`.
///
/// `w` is given in the same coordinates and must vanish on `b_1, b_2`.
pub fn phi_w_template(space: &QuadSpace, w: &[GaussRat]) -> Result<Matrix, CliffordError> {
    let n = space.n;
    if w.len() != n || !w[..2.min(n)].iter().all(GaussRat::is_zero) {
        return Err(CliffordError::BadSupport);
    }
    let mut cols = Vec::with_capacity(n);
    cols.push(basis_vector(n, 1));
    let mut c2 = add_vec(&basis_vector(n, 2), w);
    c2[0] = &c2[0] - &space.q(w);
    cols.push(c2);
    for j in 3..=n {
        let x = basis_vector(n, j);
        let mut c = x.clone();
        c[0] = &c[0] - &space.h(&x, w).scale_int(2);
        cols.push(c);
    }
    Ok(Matrix::from_columns(&cols))
}

/// `φ_w` for the split form, in the standard basis.
pub fn phi_w_matrix(n: usize, w: &[GaussRat]) -> Result<Matrix, CliffordError> {
    if n < 2 {
        return Err(CliffordError::BadSupport);
    }
    phi_w_template(&QuadSpace::new(n, QuadForm::Split), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<GaussRat> {
        xs.iter().map(|&x| GaussRat::int(x)).collect()
    }

    #[test]
    fn h_restricts_to_q() {
        for form in [QuadForm::NegSum, QuadForm::Split] {
            let s = QuadSpace::new(5, form);
            let x = v(&[1, -2, 3, 0, 5]);
            assert_eq!(s.h(&x, &x), s.q(&x));
        }
    }

    #[test]
    fn phi_w_examples() {
        assert_eq!(phi_w_matrix(4, &v(&[0, 0, 0, 0])).unwrap(), Matrix::identity(4));
        let m = phi_w_matrix(4, &v(&[0, 0, 1, 0])).unwrap();
        // q_4(e_3) = 0, so φ(e_2) = e_2 + e_3
        assert_eq!(m.column(1), v(&[0, 1, 1, 0]));
        // h(e_4, e_3) = 1/2, so φ(e_4) = e_4 - e_1
        assert_eq!(m.column(3), v(&[-1, 0, 0, 1]));
        assert!(QuadSpace::new(4, QuadForm::Split).preserves(&m));
        assert!(phi_w_matrix(4, &v(&[1, 0, 0, 0])).is_err());
    }
}
