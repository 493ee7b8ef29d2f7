//! Bracketed scalar root finding: bisection followed by a guarded Newton polish.

/// Outcome of a bracketed solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

pub(crate) struct Bisection {
    pub rtol: f64,
    pub max_iter: usize,
    pub polish_steps: usize,
}

impl Default for Bisection {
    fn default() -> Self {
        Bisection {
            rtol: 1e-14,
            max_iter: 200,
            polish_steps: 3,
        }
    }
}

impl Bisection {
    /// Finds a root of `f` in `[lo, hi]`, where `f(lo)` and `f(hi)` have
    /// opposite signs. `df` is only used for the final polish and may be
    /// unreliable near the ends of the bracket.
    ///
    /// Returns `None` when the bracket does not shrink below `rtol` within
    /// `max_iter` halvings.
    pub fn solve<F, D>(&self, f: F, df: D, mut lo: f64, mut hi: f64) -> Option<Root>
    where
        F: Fn(f64) -> f64,
        D: Fn(f64) -> f64,
    {
        let mut f_lo = f(lo);
        let f_hi = f(hi);
        if f_lo == 0.0 {
            return Some(Root {
                x: lo,
                residual: 0.0,
                iterations: 0,
            });
        }
        if f_hi == 0.0 {
            return Some(Root {
                x: hi,
                residual: 0.0,
                iterations: 0,
            });
        }
        if f_lo.signum() == f_hi.signum() {
            return None;
        }

        let mut iterations = 0;
        let mut converged = false;
        while iterations < self.max_iter {
            iterations += 1;
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                // adjacent floats
                converged = true;
                break;
            }
            let f_mid = f(mid);
            if f_mid == 0.0 {
                return Some(Root {
                    x: mid,
                    residual: 0.0,
                    iterations,
                });
            }
            if f_mid.signum() == f_lo.signum() {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
            if (hi - lo) <= self.rtol * lo.abs().max(hi.abs()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }

        let mut x = lo + 0.5 * (hi - lo);
        let mut fx = f(x);
        for _ in 0..self.polish_steps {
            let slope = df(x);
            if !slope.is_finite() || slope == 0.0 {
                break;
            }
            let next = x - fx / slope;
            if !(next >= lo && next <= hi) {
                break;
            }
            let f_next = f(next);
            if f_next.abs() >= fx.abs() {
                break;
            }
            x = next;
            fx = f_next;
        }
        Some(Root {
            x,
            residual: fx.abs(),
            iterations,
        })
    }
}
