#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// A point drawn uniformly from the unit sphere in `dim` dimensions.
pub fn unit_vector(rng: &mut impl Rng, dim: usize) -> Vec<f32> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.iter().map(|x| (x / norm) as f32).collect();
        }
    }
}

/// Synsets with `n` in `3..=8` and `dim` in `2..=10`, reproducible from `seed`.
pub fn random_synsets(seed: u64, count: usize) -> Vec<Vec<Vec<f32>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(3..=8);
            let dim = rng.random_range(2..=10);
            (0..n).map(|_| unit_vector(&mut rng, dim)).collect()
        })
        .collect()
}
