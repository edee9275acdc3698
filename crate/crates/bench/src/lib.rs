//! Shared fixtures for the benchmark targets.

use mvfn_core::Multivector;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic batch of random multivectors with coefficients in [-2, 2].
pub fn sample_batch(dim: usize, count: usize, seed: u64) -> Vec<Multivector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let c: Vec<f64> = (0..1 << dim).map(|_| rng.random_range(-2.0..2.0)).collect();
            Multivector::new(dim, &c).unwrap()
        })
        .collect()
}
