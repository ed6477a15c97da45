//! Seeded sampling of exact unit vectors and Pin elements.

use rand::Rng;

use super::algebra::CliffordElement;
use super::gaussian::GaussRat;
use super::quad::dot;
use super::CliffordError;

const MAX_RETRIES: usize = 64;

pub fn random_gauss<R: Rng>(rng: &mut R, bound: i64) -> GaussRat {
    GaussRat::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, support: &[usize], bound: i64) -> Vec<GaussRat> {
    let mut v = vec![GaussRat::zero(); n];
    for &i in support {
        v[i - 1] = random_gauss(rng, bound);
    }
    v
}

/// The second point where the line `base + t·u` meets `Σ x_i² = 1`:
/// `base - 2(u·base)/(u·u) · u`. Requires `base·base = 1`.
pub fn second_intersection(base: &[GaussRat], u: &[GaussRat]) -> Result<Vec<GaussRat>, CliffordError> {
    let uu = dot(u, u);
    if uu.is_zero() {
        return Err(CliffordError::DegenerateDirection);
    }
    let t = (&dot(u, base) * &uu.inv().expect("nonzero")).scale_int(-2);
    Ok(base.iter().zip(u).map(|(b, x)| b + &(&t * x)).collect())
}

/// A unit vector supported on `support` (1-based indices), seeded by `rng`.
///
/// Obtained as the second intersection of a random line through
/// `e_{support[0]}` with the unit sphere.
pub fn unit_vector<R: Rng>(rng: &mut R, n: usize, support: &[usize]) -> Result<Vec<GaussRat>, CliffordError> {
    let first = *support.first().ok_or(CliffordError::BadSupport)?;
    let mut base = vec![GaussRat::zero(); n];
    base[first - 1] = GaussRat::one();
    for _ in 0..MAX_RETRIES {
        let u = random_vector(rng, n, support, 2);
        if let Ok(v) = second_intersection(&base, &u) {
            return Ok(v);
        }
    }
    Err(CliffordError::DegenerateDirection)
}

/// A product of `k` unit vectors supported on `support`.
pub fn pin_sample<R: Rng>(rng: &mut R, n: usize, support: &[usize], k: usize) -> Result<CliffordElement, CliffordError> {
    let mut acc = CliffordElement::one(n as u32);
    for _ in 0..k {
        let v = unit_vector(rng, n, support)?;
        acc = &acc * &CliffordElement::vector(&v);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_unit_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = unit_vector(&mut rng, 6, &[2, 3, 4, 5, 6]).unwrap();
            assert!(dot(&v, &v).is_one());
            assert!(v[0].is_zero());
        }
    }

    #[test]
    fn orthogonal_direction_returns_the_base() {
        let base = vec![GaussRat::one(), GaussRat::zero(), GaussRat::zero()];
        let u = vec![GaussRat::zero(), GaussRat::one(), GaussRat::zero()];
        assert_eq!(second_intersection(&base, &u).unwrap(), base);
        let iso = vec![GaussRat::zero(), GaussRat::one(), GaussRat::i()];
        assert_eq!(second_intersection(&base, &iso), Err(CliffordError::DegenerateDirection));
    }

    #[test]
    fn seeded_sampling_is_deterministic() {
        let a = pin_sample(&mut ChaCha8Rng::seed_from_u64(3), 4, &[1, 2, 3, 4], 3).unwrap();
        let b = pin_sample(&mut ChaCha8Rng::seed_from_u64(3), 4, &[1, 2, 3, 4], 3).unwrap();
        assert_eq!(a, b);
    }
}
