//! Seeded random instance generators shared by the property suites,
//! acceptance tests and benchmarks.
//!
//! Each trial derives its own RNG from `(seed, stream, trial)` through a
//! splitmix chain, so batches produce identical results whether they run
//! sequentially or on rayon.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measures::{Measure, SampleSpace};
use crate::polar::VPolytope;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic per-trial RNG.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mixed = splitmix(seed ^ splitmix(stream) ^ splitmix(trial.wrapping_mul(0xD6E8FEB86659FD93)));
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Strictly positive measure with weights in `[lo, hi)`.
pub fn positive_measure(rng: &mut ChaCha8Rng, space: &Arc<SampleSpace>, lo: f64, hi: f64) -> Measure {
    let weights = (0..space.len()).map(|_| rng.random_range(lo..hi)).collect();
    Measure::new(space.clone(), weights).expect("positive weights")
}

/// Uniform point on the probability simplex (via normalized exponentials).
pub fn simplex_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n)
        .map(|_| -rng.random_range(1e-12..1.0f64).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / total).collect()
}

/// Vector with coordinates uniform in `[lo, hi)`.
pub fn coords(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(lo..hi)).collect()
}

/// Direction on the unit sphere (Box-Muller normals, normalized).
pub fn unit_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let mut d: Vec<f64> = Vec::with_capacity(n);
        while d.len() < n {
            let u1: f64 = rng.random_range(1e-12..1.0);
            let u2: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let r = (-2.0 * u1.ln()).sqrt();
            d.push(r * u2.cos());
            if d.len() < n {
                d.push(r * u2.sin());
            }
        }
        let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-9 {
            return d.into_iter().map(|v| v / norm).collect();
        }
    }
}

/// Random V-polytope with up to `max_vertices` vertices in `[-range, range]^dim`.
pub fn random_vpolytope(rng: &mut ChaCha8Rng, dim: usize, max_vertices: usize, range: f64) -> VPolytope {
    let nv = rng.random_range(1..=max_vertices);
    let vertices = (0..nv).map(|_| coords(rng, dim, -range, range)).collect();
    VPolytope::new(dim, vertices).expect("finite coordinates")
}

/// Random V-polytope guaranteed to absorb (0 in the interior), built by
/// adding a small symmetric core to random vertices.
pub fn absorbing_vpolytope(rng: &mut ChaCha8Rng, dim: usize, extra_vertices: usize, range: f64) -> VPolytope {
    let mut vertices: Vec<Vec<f64>> = (0..extra_vertices)
        .map(|_| coords(rng, dim, -range, range))
        .collect();
    for i in 0..dim {
        for sign in [1.0, -1.0] {
            let mut v = vec![0.0; dim];
            v[i] = 0.3 * sign;
            vertices.push(v);
        }
    }
    VPolytope::new(dim, vertices).expect("finite coordinates")
}
