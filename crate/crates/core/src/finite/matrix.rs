//! Square matrices over `F_p`.

use super::field::Fp;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    n: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FqMatrix { n, data }
    }

    pub fn from_rows(f: Fp, rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend(row.iter().map(|&x| f.element(x)));
        }
        FqMatrix { n, data }
    }

    /// `I + t·E_ij` (0-based indices).
    pub fn elementary(f: Fp, n: usize, i: usize, j: usize, t: i64) -> Self {
        assert_ne!(i, j);
        let mut m = Self::identity(n);
        m.data[i * n + j] = f.element(t);
        m
    }

    pub fn diagonal(f: Fp, entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::identity(n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = f.element(x);
        }
        m
    }

    /// `diag(a, b)`.
    pub fn block_diag(a: &FqMatrix, b: &FqMatrix) -> Self {
        let n = a.n + b.n;
        let mut m = FqMatrix { n, data: vec![0; n * n] };
        for i in 0..a.n {
            for j in 0..a.n {
                m.data[i * n + j] = a.get(i, j);
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m.data[(a.n + i) * n + a.n + j] = b.get(i, j);
            }
        }
        m
    }

    /// The permutation matrix exchanging the two halves of `k^{2m}`.
    pub fn half_swap(m: usize) -> Self {
        let n = 2 * m;
        let mut s = FqMatrix { n, data: vec![0; n * n] };
        for i in 0..m {
            s.data[i * n + m + i] = 1;
            s.data[(m + i) * n + i] = 1;
        }
        s
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j];
            }
        }
        t
    }

    pub fn mul(&self, f: Fp, rhs: &FqMatrix) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = f.add(out[i * n + j], f.mul(a, rhs.data[k * n + j]));
                }
            }
        }
        FqMatrix { n, data: out }
    }

    pub fn apply(&self, f: Fp, v: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let row = &self.data[i * n..(i + 1) * n];
                row.iter().zip(v).fold(0, |acc, (&a, &x)| (acc + a * x) % f.p())
            })
            .collect()
    }

    pub fn det(&self, f: Fp) -> u32 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let p = a[col * n + col];
            det = f.mul(det, p);
            let p_inv = f.inv(p).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], p_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self, f: Fp) -> Option<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
            let p_inv = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], p_inv);
                inv[col * n + j] = f.mul(inv[col * n + j], p_inv);
            }
            for r in 0..n {
                let factor = a[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Some(FqMatrix { n, data: inv })
    }

    /// `(Aᵀ)⁻¹`.
    pub fn inverse_transpose(&self, f: Fp) -> Option<Self> {
        self.inverse(f).map(|m| m.transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let f = Fp::new(5).unwrap();
        let a = FqMatrix::from_rows(f, &[vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]]);
        assert_eq!(a.det(f), 1);
        assert_eq!(a.mul(f, &a), FqMatrix::identity(3));
        let e = FqMatrix::elementary(f, 3, 0, 2, 2);
        let ei = e.inverse(f).unwrap();
        assert_eq!(e.mul(f, &ei), FqMatrix::identity(3));
        assert_eq!(e.inverse_transpose(f).unwrap(), FqMatrix::elementary(f, 3, 2, 0, -2));
        let singular = FqMatrix::from_rows(f, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(f), 0);
        assert!(singular.inverse(f).is_none());
    }

    #[test]
    fn swap_and_blocks() {
        let f = Fp::new(5).unwrap();
        let s = FqMatrix::half_swap(3);
        assert_eq!(s.apply(f, &[1, 2, 3, 4, 0, 1]), vec![4, 0, 1, 1, 2, 3]);
        let b = FqMatrix::block_diag(&FqMatrix::diagonal(f, &[2]), &FqMatrix::identity(1));
        assert_eq!(b.apply(f, &[3, 3]), vec![1, 3]);
    }
}
