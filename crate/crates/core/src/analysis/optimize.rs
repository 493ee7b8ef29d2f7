use std::f64::consts::TAU;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;

use super::ratio_from_angles;
use crate::error::{Error, Result};
use crate::polygon::CentralAngles;

/// Seed for the random restarts of [`maximize_ratio`].
const RESTART_SEED: u64 = 0x5eed;

/// Nelder-Mead simplex minimizer with dimension-adaptive coefficients.
#[derive(Debug, Clone)]
pub struct NelderMead {
    /// Stop when `max f - min f` over the simplex falls below this...
    pub ftol: f64,
    /// ...and every vertex is within this distance (max norm) of the best.
    pub xtol: f64,
    pub max_iter: usize,
    pub initial_step: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl NelderMead {
    pub fn new(ftol: f64) -> Self {
        NelderMead {
            ftol,
            xtol: ftol.sqrt(),
            max_iter: 20_000,
            initial_step: 0.5,
        }
    }

    pub fn minimize<F>(&self, mut f: F, x0: &[f64]) -> Minimum
    where
        F: FnMut(&[f64]) -> f64,
    {
        let dim = x0.len();
        let d = dim as f64;
        let (alpha, gamma, rho, sigma) = if dim >= 2 {
            (1.0, 1.0 + 2.0 / d, 0.75 - 0.5 / d, 1.0 - 1.0 / d)
        } else {
            (1.0, 2.0, 0.5, 0.5)
        };
        let mut eval = |x: &[f64]| {
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
        simplex.push((x0.to_vec(), eval(x0)));
        for i in 0..dim {
            let mut x = x0.to_vec();
            x[i] += self.initial_step;
            let fx = eval(&x);
            simplex.push((x, fx));
        }

        let mut iterations = 0;
        let mut converged = false;
        while iterations < self.max_iter {
            simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
            let best = simplex[0].1;
            let worst = simplex[dim].1;
            let spread = simplex[1..]
                .iter()
                .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
                .fold(0.0f64, f64::max);
            if (worst - best).abs() < self.ftol && spread < self.xtol {
                converged = true;
                break;
            }
            iterations += 1;

            let mut centroid = vec![0.0; dim];
            for (x, _) in &simplex[..dim] {
                for (c, v) in centroid.iter_mut().zip(x) {
                    *c += v / d;
                }
            }
            let toward = |coef: f64, from: &[f64]| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(from)
                    .map(|(c, w)| c + coef * (c - w))
                    .collect()
            };

            let worst_x = simplex[dim].0.clone();
            let reflected = toward(alpha, &worst_x);
            let f_r = eval(&reflected);
            let second_worst = simplex[dim - 1].1;

            if f_r < best {
                let expanded = toward(alpha * gamma, &worst_x);
                let f_e = eval(&expanded);
                simplex[dim] = if f_e < f_r {
                    (expanded, f_e)
                } else {
                    (reflected, f_r)
                };
                continue;
            }
            if f_r < second_worst {
                simplex[dim] = (reflected, f_r);
                continue;
            }
            let (contracted, f_c) = if f_r < worst {
                let c = toward(alpha * rho, &worst_x);
                let fc = eval(&c);
                (c, fc)
            } else {
                let c = toward(-rho, &worst_x);
                let fc = eval(&c);
                (c, fc)
            };
            if f_c < worst.min(f_r) {
                simplex[dim] = (contracted, f_c);
                continue;
            }
            // shrink towards the best vertex
            let best_x = simplex[0].0.clone();
            for (x, fx) in simplex.iter_mut().skip(1) {
                for (v, b) in x.iter_mut().zip(&best_x) {
                    *v = b + sigma * (*v - b);
                }
                *fx = eval(x);
            }
        }
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (x, fx) = simplex.swap_remove(0);
        Minimum {
            x,
            fx,
            iterations,
            converged,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    pub n: usize,
    pub best_angles: CentralAngles,
    pub best_ratio: f64,
    pub restarts_used: usize,
    pub converged: bool,
}

/// Maps unconstrained `y` (with an implicit trailing zero) to angles
/// `2 pi softmax(y)`.
fn angles_from_params(y: &[f64]) -> Option<CentralAngles> {
    let top = y.iter().copied().fold(0.0f64, f64::max);
    let weights: Vec<f64> = y
        .iter()
        .chain(std::iter::once(&0.0))
        .map(|v| (v - top).exp())
        .collect();
    let total: f64 = weights.iter().sum();
    let angles: Vec<f64> = weights.iter().map(|w| TAU * w / total).collect();
    CentralAngles::new(angles).ok()
}

struct Run {
    angles: CentralAngles,
    ratio: f64,
    converged: bool,
}

fn run_from(n: usize, start: Vec<f64>, tol: f64) -> Option<Run> {
    let solver = NelderMead::new(tol);
    let mut best: Option<(CentralAngles, f64)> = None;
    let mut objective = |y: &[f64]| -> f64 {
        let Some(angles) = angles_from_params(y) else {
            return f64::INFINITY;
        };
        match ratio_from_angles(&angles) {
            Ok(r) if r.ratio.is_finite() => {
                if best.as_ref().is_none_or(|(_, b)| r.ratio > *b) {
                    best = Some((angles, r.ratio));
                }
                -r.ratio
            }
            _ => f64::INFINITY,
        }
    };

    // restart from the previous minimum until the objective stops moving
    let mut x = start;
    let mut last = f64::INFINITY;
    let mut converged = false;
    for _ in 0..8 {
        let m = solver.minimize(&mut objective, &x);
        let settled = (last - m.fx).abs() < tol;
        x = m.x;
        last = m.fx;
        converged = m.converged;
        if settled && converged {
            break;
        }
    }
    debug_assert_eq!(x.len(), n - 1);
    best.map(|(angles, ratio)| Run {
        angles,
        ratio,
        converged,
    })
}

/// A single optimizer run started from `start`.
pub fn maximize_ratio_from(start: &CentralAngles, tol: f64) -> Result<OptResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }
    let n = start.len();
    let a = start.as_slice();
    let last = a[n - 1].ln();
    let y: Vec<f64> = a[..n - 1].iter().map(|v| v.ln() - last).collect();
    let run = run_from(n, y, tol).ok_or(Error::NonConvergence { restarts: 1, tol })?;
    Ok(OptResult {
        n,
        best_angles: run.angles,
        best_ratio: run.ratio,
        restarts_used: 1,
        converged: run.converged,
    })
}

/// Maximizes `D_n` over the open simplex of central angles.
///
/// One start at the regular polygon plus `restarts` random starts; the best
/// point ever evaluated is returned.
pub fn maximize_ratio(n: usize, restarts: usize, tol: f64) -> Result<OptResult> {
    if n < 3 {
        return Err(Error::TooFewSides { count: n });
    }
    if restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }

    let starts: Vec<Vec<f64>> = std::iter::once(vec![0.0; n - 1])
        .chain((0..restarts as u64).map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED);
            rng.set_stream(k);
            let draws: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect::<Vec<f64>>();
            let last = draws[n - 1].ln();
            draws[..n - 1].iter().map(|d| d.ln() - last).collect()
        }))
        .collect();

    let runs: Vec<Option<Run>> = starts
        .into_par_iter()
        .map(|s| run_from(n, s, tol))
        .collect();

    let restarts_used = runs.len();
    let converged = runs.iter().flatten().any(|r| r.converged);
    let best = runs
        .into_iter()
        .flatten()
        .fold(None::<Run>, |acc, r| match acc {
            Some(a) if a.ratio >= r.ratio => Some(a),
            _ => Some(r),
        })
        .ok_or(Error::NonConvergence { restarts, tol })?;

    Ok(OptResult {
        n,
        best_angles: best.angles,
        best_ratio: best.ratio,
        restarts_used,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::regular_ratio;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = NelderMead::new(1e-14).minimize(f, &[-1.2, 1.0]);
        assert!(m.converged);
        assert!(
            (m.x[0] - 1.0).abs() < 1e-5 && (m.x[1] - 1.0).abs() < 1e-5,
            "{:?}",
            m.x
        );
    }

    #[test]
    fn quadratic_bowl_in_five_dims() {
        let f = |x: &[f64]| {
            x.iter()
                .enumerate()
                .map(|(i, v)| (i as f64 + 1.0) * (v - 0.5).powi(2))
                .sum()
        };
        let m = NelderMead::new(1e-16).minimize(f, &[0.0; 5]);
        assert!(m.converged);
        assert!(m.x.iter().all(|v| (v - 0.5).abs() < 1e-6));
    }

    #[test]
    fn params_at_origin_are_uniform() {
        let a = angles_from_params(&[0.0; 4]).unwrap();
        assert!(a.as_slice().iter().all(|&v| (v - TAU / 5.0).abs() < 1e-15));
    }

    #[test]
    fn pentagon_maximum_is_regular() {
        let r = maximize_ratio(5, 4, 1e-10).unwrap();
        assert!(r.converged);
        assert!((r.best_ratio - regular_ratio(5).unwrap().x_n).abs() < 1e-8);
        for &a in r.best_angles.as_slice() {
            assert!((a - TAU / 5.0).abs() < 2e-4, "{:?}", r.best_angles);
        }
        assert_eq!(r.restarts_used, 5);
    }

    #[test]
    fn random_start_reaches_regular_hexagon() {
        let start = CentralAngles::new(vec![0.3, 0.6, 0.9, 1.2, 1.5, TAU - 4.5]).unwrap();
        let r = maximize_ratio_from(&start, 1e-10).unwrap();
        assert!(r.converged);
        for &a in r.best_angles.as_slice() {
            assert!((a - TAU / 6.0).abs() < 2e-4, "{:?}", r.best_angles);
        }
        assert!((r.best_ratio - regular_ratio(6).unwrap().x_n).abs() < 1e-8);
    }

    #[test]
    fn quadrilateral_objective_is_flat() {
        let r = maximize_ratio(4, 2, 1e-10).unwrap();
        assert!((r.best_ratio - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bad_arguments() {
        assert!(maximize_ratio(2, 1, 1e-10).is_err());
        assert!(maximize_ratio(5, 0, 1e-10).is_err());
        assert!(maximize_ratio(5, 1, 0.0).is_err());
    }
}
