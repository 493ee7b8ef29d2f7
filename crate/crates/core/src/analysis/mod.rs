//! The approximation ratio `D_n = S_n / A_n` and the numerical checks built
//! around it.
//!
//! For regular polygons the ratio has the closed form
//! `x_n = n tan(pi/n) (1 - 2/n)^(n/2)`, which equals 1 for triangles and
//! quadrilaterals and increases towards `pi / e`.

mod optimize;
mod sampling;
mod verify;

pub use optimize::{maximize_ratio, maximize_ratio_from, Minimum, NelderMead, OptResult};
pub use sampling::{sample_angles_seeded, sample_random_angles, MAX_REJECTIONS};
pub use verify::{monte_carlo_verify, VerifyReport, Violation, BAND_TOL};

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::heron::generalized_heron;
use crate::polygon::{
    central_angles, exact_area_from_angles, sides_from_angles, solve_circumradius, AreaReport,
    CentralAngles, SideLengths,
};

/// The limit of the regular-polygon ratio, `pi / e`.
pub fn heron_limit() -> f64 {
    PI / E
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioReport {
    pub n: usize,
    pub exact: f64,
    pub approx: f64,
    pub ratio: f64,
    pub rel_error: f64,
}

impl RatioReport {
    fn from_report(n: usize, report: AreaReport) -> RatioReport {
        RatioReport {
            n,
            exact: report.exact,
            approx: report.approx,
            ratio: report.ratio,
            rel_error: report.rel_error,
        }
    }

    pub fn area_report(&self) -> AreaReport {
        AreaReport {
            exact: self.exact,
            approx: self.approx,
            ratio: self.ratio,
            rel_error: self.rel_error,
        }
    }
}

/// `D_n` for a polygon given by its sides. The exact area goes through the
/// circumradius solver.
pub fn ratio(sides: &SideLengths) -> Result<RatioReport> {
    let config = solve_circumradius(sides)?;
    let angles = central_angles(sides, &config)?;
    let exact = exact_area_from_angles(&angles, config.radius)?;
    let approx = generalized_heron(sides).approx_area;
    Ok(RatioReport::from_report(
        sides.len(),
        AreaReport::new(exact, approx),
    ))
}

/// `D_n` for a polygon given by its central angles on the unit circle.
pub fn ratio_from_angles(angles: &CentralAngles) -> Result<RatioReport> {
    let exact = exact_area_from_angles(angles, 1.0)?;
    let sides = sides_from_angles(angles, 1.0)?;
    let approx = generalized_heron(&sides).approx_area;
    Ok(RatioReport::from_report(
        angles.len(),
        AreaReport::new(exact, approx),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequencePoint {
    pub n: u64,
    pub x_n: f64,
    pub gap_to_limit: f64,
}

/// `x_n = n tan(pi/n) (1 - 2/n)^(n/2)`, the ratio of a regular n-gon.
pub fn regular_ratio(n: u64) -> Result<SequencePoint> {
    if n < 3 {
        return Err(Error::TooFewSides { count: n as usize });
    }
    let nf = n as f64;
    let power = (0.5 * nf * (-2.0 / nf).ln_1p()).exp();
    let x_n = nf * (PI / nf).tan() * power;
    Ok(SequencePoint {
        n,
        x_n,
        gap_to_limit: heron_limit() - x_n,
    })
}

/// `f(x) = x tan(pi/x) (1 - 2/x)^(x/2)` for real `x > 2`.
///
/// Near `x = 2` both factors are rewritten in terms of `x - 2` so the
/// limit `4 / pi` is approached without cancellation.
pub fn curve_f(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 2.0) {
        return Err(Error::DomainError { x });
    }
    let excess = x - 2.0;
    // tan(pi/x) = 1 / tan(pi/2 - pi/x)
    let tangent = 1.0 / (PI * excess / (2.0 * x)).tan();
    let power = (0.5 * x * (excess / x).ln()).exp();
    Ok(x * tangent * power)
}

/// Regular-polygon ratios for every `n` in `n_min..=n_max`.
pub fn sequence_table(n_min: u64, n_max: u64) -> Result<Vec<SequencePoint>> {
    if n_min < 3 {
        return Err(Error::TooFewSides {
            count: n_min as usize,
        });
    }
    if n_min > n_max {
        return Err(Error::RangeError {
            min: n_min as f64,
            max: n_max as f64,
        });
    }
    (n_min..=n_max).map(regular_ratio).collect()
}
