//! The finite groups `Δ_n = {±e_S}`, preimages of the diagonal sign
//! matrices under `ρ_n`, and their embedding into `Spin_{n+1}`.

use std::collections::BTreeSet;
use std::io::{self, Write};

use super::algebra::{blade_indices, blade_mul, grade, Blade, CliffordElement};
use super::gaussian::GaussRat;

/// `sign · e_S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedBlade {
    pub negative: bool,
    pub blade: Blade,
}

impl SignedBlade {
    pub fn new(sign: i8, blade: Blade) -> Self {
        SignedBlade { negative: sign < 0, blade }
    }

    pub fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn mul(self, rhs: SignedBlade) -> SignedBlade {
        let (s, b) = blade_mul(self.blade, rhs.blade);
        SignedBlade::new(self.sign() * rhs.sign() * s, b)
    }

    /// Inverse of `±e_S`, namely `±e_S⁻¹ = ±ē_S`.
    pub fn inv(self) -> SignedBlade {
        let (s, _) = blade_mul(self.blade, self.blade);
        // e_S² = s, so e_S⁻¹ = s·e_S
        SignedBlade::new(self.sign() * s, self.blade)
    }

    pub fn to_element(self, n: u32) -> CliffordElement {
        CliffordElement::blade(n, self.blade, GaussRat::int(self.sign() as i64))
    }

    /// Label `+e{1,2}` / `-e{}`.
    pub fn label(self) -> String {
        let idx: Vec<String> = blade_indices(self.blade).iter().map(u32::to_string).collect();
        format!("{}e{{{}}}", if self.negative { '-' } else { '+' }, idx.join(","))
    }

    /// Diagonal of `ρ_n(±e_S)`: the entry at `j` is `-1` exactly when
    /// `ε(e_S) e_j ē_S = -e_j`.
    pub fn rho_diagonal(self, n: u32) -> Vec<i8> {
        let g = grade(self.blade);
        let eps_sign: i8 = if g % 2 == 1 { -1 } else { 1 };
        let t_sign: i8 = if (g * g.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
        let bar_sign = eps_sign * t_sign;
        (0..n)
            .map(|j| {
                let (s1, b1) = blade_mul(self.blade, 1 << j);
                let (s2, b2) = blade_mul(b1, self.blade);
                debug_assert_eq!(b2, 1 << j);
                eps_sign * bar_sign * s1 * s2
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct DeltaGroup {
    pub n: u32,
    pub elements: Vec<SignedBlade>,
}

impl DeltaGroup {
    pub fn new(n: u32) -> Self {
        assert!((1..=16).contains(&n), "Δ_n is materialized for 1 <= n <= 16");
        let elements = (0..1u32 << n)
            .flat_map(|b| [SignedBlade::new(1, b), SignedBlade::new(-1, b)])
            .collect();
        DeltaGroup { n, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Generators `e_1..e_n`; together they also produce `-1 = e_1²`.
    pub fn generators(&self) -> Vec<SignedBlade> {
        (0..self.n).map(|i| SignedBlade::new(1, 1 << i)).collect()
    }

    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<SignedBlade> = self.elements.iter().copied().collect();
        self.generators()
            .iter()
            .all(|g| self.elements.iter().all(|x| set.contains(&x.mul(*g))))
    }

    pub fn center(&self) -> Vec<SignedBlade> {
        let gens = self.generators();
        self.elements
            .iter()
            .copied()
            .filter(|z| gens.iter().all(|g| z.mul(*g) == g.mul(*z)))
            .collect()
    }

    pub fn squares(&self) -> BTreeSet<SignedBlade> {
        self.elements.iter().map(|x| x.mul(*x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// `[Δ, Δ]`: the normal closure of the commutators of generators.
    pub fn commutator_subgroup(&self) -> BTreeSet<SignedBlade> {
        let gens = self.generators();
        let one = SignedBlade::new(1, 0);
        let mut set: BTreeSet<SignedBlade> = BTreeSet::from([one]);
        let mut frontier = Vec::new();
        for a in &gens {
            for b in &gens {
                let c = a.mul(*b).mul(a.inv()).mul(b.inv());
                if set.insert(c) {
                    frontier.push(c);
                }
            }
        }
        while let Some(x) = frontier.pop() {
            let current: Vec<SignedBlade> = set.iter().copied().collect();
            let mut new = Vec::new();
            for y in current {
                new.push(x.mul(y));
            }
            for g in &gens {
                new.push(g.mul(x).mul(g.inv()));
            }
            for z in new {
                if set.insert(z) {
                    frontier.push(z);
                }
            }
        }
        set
    }

    pub fn abelianization_order(&self) -> usize {
        self.order() / self.commutator_subgroup().len()
    }

    /// Write the multiplication table as CSV with `+e{..}` / `-e{..}`
    /// labels; the row element multiplies on the left.
    pub fn write_table_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let labels: Vec<String> = self.elements.iter().map(|x| x.label()).collect();
        write!(out, "\"\"")?;
        for l in &labels {
            write!(out, ",\"{l}\"")?;
        }
        writeln!(out)?;
        for (x, lx) in self.elements.iter().zip(&labels) {
            write!(out, "\"{lx}\"")?;
            for y in &self.elements {
                write!(out, ",\"{}\"", x.mul(*y).label())?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// The image of `±e_S ∈ Δ_n` in `C_{n+1}` under `e_i ↦ e_i e_{n+1}`.
pub fn embed_into_spin(n: u32, x: SignedBlade) -> SignedBlade {
    let top = SignedBlade::new(1, 1 << n);
    blade_indices(x.blade)
        .into_iter()
        .map(|i| SignedBlade::new(1, 1 << (i - 1)).mul(top))
        .fold(SignedBlade::new(x.sign(), 0), |acc, y| acc.mul(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::pin::rho;
    use crate::clifford::Matrix;

    #[test]
    fn small_groups() {
        let d1 = DeltaGroup::new(1);
        assert_eq!(d1.order(), 4);
        assert!(d1.is_abelian());
        // e_1 has order 4, so Δ_1 is cyclic
        let e1 = SignedBlade::new(1, 1);
        assert_eq!(e1.mul(e1), SignedBlade::new(-1, 0));

        let d2 = DeltaGroup::new(2);
        assert_eq!(d2.order(), 8);
        assert!(!d2.is_abelian());
        assert_eq!(d2.center().len(), 2);
        assert_eq!(d2.abelianization_order(), 4);
    }

    #[test]
    fn rho_diagonal_matches_general_rho() {
        for n in 1..=4 {
            for x in DeltaGroup::new(n).elements {
                let m = rho(&x.to_element(n)).unwrap();
                let d: Vec<GaussRat> = x.rho_diagonal(n).iter().map(|&s| GaussRat::int(s as i64)).collect();
                assert_eq!(m, Matrix::diagonal(&d));
            }
        }
    }

    #[test]
    fn embedding_of_delta_one() {
        let image: BTreeSet<SignedBlade> = DeltaGroup::new(1).elements.iter().map(|&x| embed_into_spin(1, x)).collect();
        let expected = BTreeSet::from([
            SignedBlade::new(1, 0),
            SignedBlade::new(-1, 0),
            SignedBlade::new(1, 0b11),
            SignedBlade::new(-1, 0b11),
        ]);
        assert_eq!(image, expected);
    }

    #[test]
    fn csv_labels() {
        let mut buf = Vec::new();
        DeltaGroup::new(1).write_table_csv(&mut buf).unwrap();
        let csv = String::from_utf8(buf).unwrap();
        assert!(csv.starts_with("\"\",\"+e{}\",\"-e{}\",\"+e{1}\",\"-e{1}\""));
        assert_eq!(csv.lines().count(), 5);
    }
}
