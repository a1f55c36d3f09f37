//! Seeded rational sampling. Everything here is deterministic per seed;
//! constructions stay reproducible run to run.

use crate::geom::{sqrt_ceil, QVector, Ratio};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform dyadic rational `k / 2^bits` with `k` in `[-2^bits, 2^bits]`.
pub fn small_ratio(rng: &mut ChaCha8Rng, bits: u32) -> Ratio {
    let span = 1i64 << bits;
    let k = rng.gen_range(-span..=span);
    Ratio::new(BigInt::from(k), BigInt::from(span))
}

/// Vector of small dyadic rationals, entries in `[-1, 1]`.
pub fn rational_vector(rng: &mut ChaCha8Rng, dim: usize, bits: u32) -> QVector {
    QVector::new((0..dim).map(|_| small_ratio(rng, bits)).collect())
}

/// Nonzero vector with Euclidean norm strictly below `bound`, exactly.
pub fn vector_in_ball(rng: &mut ChaCha8Rng, dim: usize, bound: &Ratio) -> QVector {
    assert!(dim > 0);
    loop {
        let raw = rational_vector(rng, dim, 6);
        if raw.is_zero() {
            continue;
        }
        // ||raw|| <= 1 + sqrt_ceil(||raw||^2), so scaling by
        // bound * m / (2^10 (1 + sqrt_ceil)) keeps the norm under bound
        let m = rng.gen_range(1i64..1024);
        let ceil_norm = Ratio::from_integer(sqrt_ceil(&raw.norm_sq()) + BigInt::from(1));
        let factor = bound * Ratio::new(BigInt::from(m), BigInt::from(1024)) / ceil_norm;
        let v = raw.scale(&factor);
        debug_assert!(&v.norm_sq() < &(bound * bound));
        return v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    #[test]
    fn ball_samples_stay_strictly_inside() {
        let mut rng = seeded_rng(11);
        let bound = ratio(1, 12);
        let bound_sq = &bound * &bound;
        for _ in 0..200 {
            let v = vector_in_ball(&mut rng, 5, &bound);
            assert!(v.norm_sq() < bound_sq);
            assert!(!v.is_zero());
        }
    }

    #[test]
    fn sampling_is_reproducible_per_seed() {
        let a = rational_vector(&mut seeded_rng(7), 6, 8);
        let b = rational_vector(&mut seeded_rng(7), 6, 8);
        assert_eq!(a, b);
    }
}
