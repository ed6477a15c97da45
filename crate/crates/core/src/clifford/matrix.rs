//! Small dense square matrices over the Gaussian rationals.

use std::fmt;
use std::ops::Mul;

use super::gaussian::GaussRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<GaussRat>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![GaussRat::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, GaussRat::one());
        }
        m
    }

    pub fn diagonal(entries: &[GaussRat]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, c) in entries.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_columns(columns: &[Vec<GaussRat>]) -> Self {
        let n = columns.len();
        let mut m = Self::zeros(n);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "matrix must be square");
            for (i, c) in col.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: GaussRat) {
        self.data[i * self.n + j] = c;
    }

    pub fn column(&self, j: usize) -> Vec<GaussRat> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for (j, x) in v.iter().enumerate() {
                    acc += &(self.get(i, j) * x);
                }
                acc
            })
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> GaussRat {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = GaussRat::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return GaussRat::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = &det * &p;
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = &a[r * n + col] * &p_inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &factor * &a[col * n + j];
                    a[r * n + j] = &a[r * n + j] - &sub;
                }
            }
        }
        det
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = GaussRat::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_examples() {
        let m = Matrix::from_columns(&[
            vec![GaussRat::int(0), GaussRat::int(1)],
            vec![GaussRat::int(1), GaussRat::int(0)],
        ]);
        assert_eq!(m.det(), GaussRat::int(-1));
        assert_eq!(Matrix::identity(4).det(), GaussRat::one());
        let d = Matrix::diagonal(&[GaussRat::int(2), GaussRat::i(), GaussRat::int(3)]);
        assert_eq!(d.det(), GaussRat::from_ints(0, 6));
        assert!(d.is_diagonal());
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_columns(&[
            vec![GaussRat::int(1), GaussRat::int(2)],
            vec![GaussRat::int(3), GaussRat::int(4)],
        ]);
        assert_eq!((&a * &Matrix::identity(2)), a);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(0, 1), &GaussRat::int(2));
    }
}
