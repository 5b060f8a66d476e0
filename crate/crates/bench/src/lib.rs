//! Shared fixtures for the benchmarks: seeded random states, operators,
//! and directions.

use qstar_core::{Complex64, ComplexMatrix, DensityMatrix, Direction};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_states(n: usize, seed: u64) -> Vec<DensityMatrix> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| loop {
            let x = rng.gen_range(-1.0..=1.0);
            let y = rng.gen_range(-1.0..=1.0);
            let z = rng.gen_range(-1.0..=1.0);
            if x * x + y * y + z * z <= 1.0 {
                break DensityMatrix::from_bloch(x, y, z).unwrap();
            }
        })
        .collect()
}

pub fn random_operators(n: usize, seed: u64) -> Vec<ComplexMatrix> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let mut m = ComplexMatrix::zeros(2, 2);
            for i in 0..2 {
                for j in 0..2 {
                    m.set(
                        i,
                        j,
                        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    );
                }
            }
            m
        })
        .collect()
}

pub fn random_directions(n: usize, seed: u64) -> Vec<Direction> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen_range(-1.0..=1.0);
            Direction::new(u.acos(), rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}
