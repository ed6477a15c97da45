//! Prime fields `F_p` with small `p`, elements stored as reduced `u32`.

use super::FiniteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    /// The field with `p` elements. `p` must be a prime below `2^15`.
    pub fn new(p: u64) -> Result<Self, FiniteError> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !prime || p >= 1 << 15 {
            return Err(FiniteError::NotPrime(p));
        }
        Ok(Fp { p: p as u32 })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u64 {
        self.p as u64
    }

    /// Reduce an integer into `[0, p)`.
    pub fn element(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        (a % self.p != 0).then(|| self.pow(a, self.p as u64 - 2))
    }

    pub fn div(self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|b| self.mul(a, b))
    }

    /// The smallest `i` with `i² = -1`, when one exists.
    pub fn sqrt_minus_one(self) -> Option<u32> {
        let target = self.neg(1);
        (0..self.p).find(|&x| self.mul(x, x) == target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(Fp::new(5).is_ok());
        assert_eq!(Fp::new(9), Err(FiniteError::NotPrime(9)));
        assert_eq!(Fp::new(1), Err(FiniteError::NotPrime(1)));
    }

    #[test]
    fn arithmetic() {
        let f = Fp::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), None);
        assert_eq!(f.element(-1), 12);
        assert_eq!(f.sqrt_minus_one(), Some(5));
        assert_eq!(Fp::new(5).unwrap().sqrt_minus_one(), Some(2));
        assert_eq!(Fp::new(7).unwrap().sqrt_minus_one(), None);
    }
}
