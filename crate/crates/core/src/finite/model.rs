//! Finite group actions on `F_q`-points, orbit enumeration and
//! orbit-stabilizer counting.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use rand::Rng;

use super::field::Fp;
use super::matrix::FqMatrix;
use super::FiniteError;

/// Groups up to this order may be enumerated element by element.
pub const DIRECT_FILTER_LIMIT: u64 = 10_000;

/// A finite group acting on the points of `F_q^d`, points encoded as
/// base-`q` integers.
pub trait FqActionModel {
    type Element: Clone + Eq + Hash;

    fn name(&self) -> String;
    fn field(&self) -> Fp;
    fn carrier_dim(&self) -> usize;
    fn group_order(&self) -> u64;
    fn identity(&self) -> Self::Element;
    fn generators(&self) -> Vec<Self::Element>;
    fn compose(&self, g: &Self::Element, h: &Self::Element) -> Self::Element;
    fn apply(&self, g: &Self::Element, x: u32) -> u32;

    fn carrier_size(&self) -> u64 {
        self.field().q().pow(self.carrier_dim() as u32)
    }

    fn encode(&self, v: &[u32]) -> u32 {
        encode(self.field(), v)
    }

    fn decode(&self, x: u32) -> Vec<u32> {
        decode(self.field(), self.carrier_dim(), x)
    }
}

pub fn encode(f: Fp, v: &[u32]) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * f.p() + c)
}

pub fn decode(f: Fp, dim: usize, mut x: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(dim);
    for _ in 0..dim {
        v.push(x % f.p());
        x /= f.p();
    }
    v
}

/// Breadth-first closure of `start` under the generators.
pub fn orbit_bfs<M: FqActionModel>(model: &M, start: u32) -> Vec<u32> {
    let gens = model.generators();
    let mut seen = HashSet::from([start]);
    let mut orbit = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = model.apply(g, x);
            if seen.insert(y) {
                orbit.push(y);
                queue.push_back(y);
            }
        }
    }
    orbit
}

/// All orbits meeting `points`, each listed once, in order of first
/// appearance.
pub fn orbits_of<M: FqActionModel>(model: &M, points: impl IntoIterator<Item = u32>) -> Vec<Vec<u32>> {
    let gens = model.generators();
    let mut seen = vec![false; model.carrier_size() as usize];
    let mut orbits = Vec::new();
    for start in points {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &gens {
                let y = model.apply(g, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbits.push(orbit);
    }
    orbits
}

/// `|G| / |orbit|`, checking divisibility.
pub fn stabilizer_from_orbit(group_order: u64, orbit_size: usize) -> Result<u64, FiniteError> {
    let o = orbit_size as u64;
    if o == 0 || group_order % o != 0 {
        return Err(FiniteError::NonDivisible { orbit: o, order: group_order });
    }
    Ok(group_order / o)
}

/// Every element of the group, by breadth-first search from the identity.
/// Fails when the generators reach a different number of elements than the
/// stated group order.
pub fn enumerate_group<M: FqActionModel>(model: &M) -> Result<Vec<M::Element>, FiniteError> {
    let expected = model.group_order();
    if expected > DIRECT_FILTER_LIMIT {
        return Err(FiniteError::TooLarge(expected));
    }
    let gens = model.generators();
    let id = model.identity();
    let mut seen = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let h = model.compose(g, &elements[i]);
            if seen.insert(h.clone()) {
                elements.push(h);
            }
        }
        i += 1;
        if elements.len() as u64 > expected {
            break;
        }
    }
    if elements.len() as u64 != expected {
        return Err(FiniteError::GeneratorMismatch { expected, found: elements.len() as u64 });
    }
    Ok(elements)
}

/// Stabilizer order of `x` by orbit-stabilizer, cross-checked against
/// direct filtering for groups of order at most [`DIRECT_FILTER_LIMIT`].
pub fn stabilizer_order<M: FqActionModel>(model: &M, x: u32) -> Result<u64, FiniteError> {
    let by_orbit = stabilizer_from_orbit(model.group_order(), orbit_bfs(model, x).len())?;
    if model.group_order() <= DIRECT_FILTER_LIMIT {
        let direct = enumerate_group(model)?.iter().filter(|g| model.apply(g, x) == x).count() as u64;
        if direct != by_orbit {
            return Err(FiniteError::StabilizerMismatch { orbit_stabilizer: by_orbit, direct });
        }
    }
    Ok(by_orbit)
}

/// A random word of length `len` in the generators.
pub fn random_element<M: FqActionModel, R: Rng>(model: &M, rng: &mut R, len: usize) -> M::Element {
    let gens = model.generators();
    (0..len).fold(model.identity(), |acc, _| model.compose(&gens[rng.gen_range(0..gens.len())], &acc))
}

/// An element of a linear group: a matrix on the ambient space and a set of
/// central sign characters, each of which scales points by `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearElement {
    pub matrix: FqMatrix,
    pub signs: u8,
}

/// A group given by linear generators on `F_q^n`, acting on the coordinate
/// subspace spanned by `coords`, which the generators must preserve.
#[derive(Clone, Debug)]
pub struct LinearModel {
    pub name: String,
    pub field: Fp,
    pub ambient: usize,
    pub coords: Vec<usize>,
    pub generators: Vec<LinearElement>,
    pub order: u64,
}

impl LinearModel {
    pub fn point(&self, v: &[i64]) -> u32 {
        let reduced: Vec<u32> = v.iter().map(|&x| self.field.element(x)).collect();
        self.encode(&reduced)
    }
}

impl FqActionModel for LinearModel {
    type Element = LinearElement;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn field(&self) -> Fp {
        self.field
    }

    fn carrier_dim(&self) -> usize {
        self.coords.len()
    }

    fn group_order(&self) -> u64 {
        self.order
    }

    fn identity(&self) -> LinearElement {
        LinearElement { matrix: FqMatrix::identity(self.ambient), signs: 0 }
    }

    fn generators(&self) -> Vec<LinearElement> {
        self.generators.clone()
    }

    fn compose(&self, g: &LinearElement, h: &LinearElement) -> LinearElement {
        LinearElement { matrix: g.matrix.mul(self.field, &h.matrix), signs: g.signs ^ h.signs }
    }

    fn apply(&self, g: &LinearElement, x: u32) -> u32 {
        let f = self.field;
        let local = self.decode(x);
        let mut full = vec![0; self.ambient];
        for (&c, &v) in self.coords.iter().zip(&local) {
            full[c] = v;
        }
        let image = g.matrix.apply(f, &full);
        let negate = g.signs.count_ones() % 2 == 1;
        let out: Vec<u32> = self
            .coords
            .iter()
            .map(|&c| if negate { f.neg(image[c]) } else { image[c] })
            .collect();
        self.encode(&out)
    }
}

/// The trivial group acting on `F_q^d`.
#[derive(Clone, Copy, Debug)]
pub struct TrivialModel {
    pub field: Fp,
    pub dim: usize,
}

impl FqActionModel for TrivialModel {
    type Element = ();

    fn name(&self) -> String {
        "trivial".into()
    }

    fn field(&self) -> Fp {
        self.field
    }

    fn carrier_dim(&self) -> usize {
        self.dim
    }

    fn group_order(&self) -> u64 {
        1
    }

    fn identity(&self) {}

    fn generators(&self) -> Vec<()> {
        Vec::new()
    }

    fn compose(&self, _: &(), _: &()) {}

    fn apply(&self, _: &(), x: u32) -> u32 {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_round_trips() {
        let f = Fp::new(5).unwrap();
        for x in 0..625 {
            assert_eq!(encode(f, &decode(f, 4, x)), x);
        }
        assert_eq!(encode(f, &[1, 0, 0]), 1);
        assert_eq!(encode(f, &[0, 1, 0]), 5);
    }

    #[test]
    fn trivial_group() {
        let m = TrivialModel { field: Fp::new(5).unwrap(), dim: 2 };
        assert_eq!(orbit_bfs(&m, 7), vec![7]);
        assert_eq!(stabilizer_order(&m, 7), Ok(1));
        assert_eq!(orbits_of(&m, 0..25).len(), 25);
    }

    #[test]
    fn non_divisible_orbit_is_reported() {
        assert_eq!(stabilizer_from_orbit(10, 3), Err(FiniteError::NonDivisible { orbit: 3, order: 10 }));
    }

    #[test]
    fn scalar_sign_action() {
        let f = Fp::new(5).unwrap();
        let m = LinearModel {
            name: "mu2".into(),
            field: f,
            ambient: 2,
            coords: vec![0, 1],
            generators: vec![LinearElement { matrix: FqMatrix::identity(2), signs: 1 }],
            order: 2,
        };
        let x = m.point(&[1, 2]);
        assert_eq!(orbit_bfs(&m, x).len(), 2);
        assert_eq!(stabilizer_order(&m, x), Ok(1));
        assert_eq!(stabilizer_order(&m, 0), Ok(2));
    }
}
