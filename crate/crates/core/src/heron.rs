//! Generalized Heron formula `S_n = sqrt(P^(4-n) * prod(P - x_i))`.
//!
//! For three sides this is Heron's formula and for four it is Brahmagupta's.
//! Both forms are evaluated as `exp` of a log-sum so the power `P^(4-n)` can
//! neither overflow nor underflow for large `n`. The side form is summed as
//! `2 ln P + 1/2 sum ln(1 - x_i / P)`, which avoids cancelling the two large
//! terms of `(4 - n) ln P + sum ln(P - x_i)`.

use crate::error::Result;
use crate::polygon::{check_radius, CentralAngles, SideLengths};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeronResult {
    pub approx_area: f64,
    pub semi_perimeter: f64,
    pub n: usize,
}

pub fn generalized_heron(sides: &SideLengths) -> HeronResult {
    let n = sides.len();
    let p = sides.semi_perimeter();
    let log_product: f64 = sides.as_slice().iter().map(|&x| (-x / p).ln_1p()).sum();
    let log_area = 2.0 * p.ln() + 0.5 * log_product;
    HeronResult {
        approx_area: log_area.exp(),
        semi_perimeter: p,
        n,
    }
}

/// The same quantity written in terms of central angles:
/// `R^2 (sum s_i)^2 prod(1 - 2 s_i / sum s_i)^(1/2)` with `s_i = sin(alpha_i / 2)`.
pub fn heron_from_angles(angles: &CentralAngles, radius: f64) -> Result<HeronResult> {
    check_radius(radius)?;
    let half_sines: Vec<f64> = angles.as_slice().iter().map(|a| (0.5 * a).sin()).collect();
    let total: f64 = half_sines.iter().sum();
    let log_product: f64 = half_sines.iter().map(|s| (-2.0 * s / total).ln_1p()).sum();
    let log_area = 2.0 * radius.ln() + 2.0 * total.ln() + 0.5 * log_product;
    Ok(HeronResult {
        approx_area: log_area.exp(),
        semi_perimeter: radius * total,
        n: angles.len(),
    })
}
