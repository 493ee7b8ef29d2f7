#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use cyclic_heron::analysis::sample_random_angles;
use cyclic_heron::CentralAngles;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Signed shoelace area of the polygon whose vertices sit on a circle of
/// `radius` at the cumulative angle positions.
pub fn shoelace_area(angles: &[f64], radius: f64) -> f64 {
    let mut theta = 0.0f64;
    let mut pts = Vec::with_capacity(angles.len());
    for a in angles {
        pts.push((radius * theta.cos(), radius * theta.sin()));
        theta += a;
    }
    let n = pts.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let (x0, y0) = pts[i];
            let (x1, y1) = pts[(i + 1) % n];
            x0 * y1 - x1 * y0
        })
        .sum();
    0.5 * twice
}

/// Angles with exactly one reflex entry, placed at a random position. The
/// reflex angle lies in `[1.02 pi, 1.8 pi]`.
pub fn reflex_angles<R: Rng>(n: usize, rng: &mut R) -> CentralAngles {
    loop {
        let big = PI * rng.random_range(1.02..1.8);
        let rest = TAU - big;
        let mut draws: Vec<f64> = (0..n - 1)
            .map(|_| -(1.0 - rng.random::<f64>()).ln())
            .collect();
        let total: f64 = draws.iter().sum();
        for d in draws.iter_mut() {
            *d *= rest / total;
        }
        let pos = rng.random_range(0..n);
        draws.insert(pos, big);
        if let Ok(a) = CentralAngles::new(draws) {
            return a;
        }
    }
}

pub fn random_angles<R: Rng>(n: usize, rng: &mut R, allow_reflex: bool) -> CentralAngles {
    sample_random_angles(n, rng, allow_reflex).unwrap()
}

/// Log-uniform radius in `[lo, hi]`.
pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
