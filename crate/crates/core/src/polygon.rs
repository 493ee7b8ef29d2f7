//! Cyclic polygons described by their side lengths.
//!
//! A cyclic polygon with chords `x_i` on a circle of radius `R` has central
//! angles `alpha_i` with `x_i = 2 R sin(alpha_i / 2)` and `sum(alpha_i) = 2 pi`.
//! Given only the sides, the radius is recovered by solving the angle-sum
//! condition. When the circle's center lies outside the polygon the longest
//! side subtends a reflex angle, and the angle-sum condition takes the form
//! `sum_{i != m} asin(x_i / 2R) = asin(x_m / 2R)`.
//!
//! Side order is kept as given but never affects any computed quantity.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use crate::error::{Error, Result};
use crate::root::Bisection;

/// Absolute tolerance on the central-angle sum.
pub const ANGLE_SUM_TOL: f64 = 1e-10;

/// `|G(R0)|` below this classifies the center as lying on the longest side.
const BOUNDARY_TOL: f64 = 1e-12;

/// Validated positive side lengths of a cyclic polygon with at least 3 sides.
#[derive(Debug, Clone, PartialEq)]
pub struct SideLengths {
    values: Vec<f64>,
}

impl SideLengths {
    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn perimeter(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn semi_perimeter(&self) -> f64 {
        0.5 * self.perimeter()
    }

    /// Index of the longest side (first one on ties).
    pub fn max_index(&self) -> usize {
        let mut best = 0;
        for (i, &x) in self.values.iter().enumerate() {
            if x > self.values[best] {
                best = i;
            }
        }
        best
    }

    pub fn max(&self) -> f64 {
        self.values[self.max_index()]
    }

    /// Multiplies every side by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<SideLengths> {
        validate_sides(&self.values.iter().map(|x| x * factor).collect::<Vec<_>>())
    }
}

impl fmt::Display for SideLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Central angles in radians, positive, summing to `2 pi`, with at most one
/// reflex entry.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralAngles {
    values: Vec<f64>,
}

impl CentralAngles {
    pub fn new(values: Vec<f64>) -> Result<CentralAngles> {
        if values.len() < 3 {
            return Err(Error::InvalidAngles(format!(
                "need at least 3 angles, got {}",
                values.len()
            )));
        }
        for (i, &a) in values.iter().enumerate() {
            if !(a.is_finite() && a > 0.0 && a < TAU) {
                return Err(Error::InvalidAngles(format!(
                    "angle {i} = {a} is outside (0, 2pi)"
                )));
            }
        }
        let sum: f64 = values.iter().sum();
        if (sum - TAU).abs() > ANGLE_SUM_TOL {
            return Err(Error::InvalidAngles(format!(
                "angles sum to {sum}, not 2pi"
            )));
        }
        let reflex = values.iter().filter(|&&a| a > PI).count();
        if reflex > 1 {
            return Err(Error::InvalidAngles(format!(
                "{reflex} angles exceed pi; at most one is possible"
            )));
        }
        Ok(CentralAngles { values })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn has_reflex(&self) -> bool {
        self.values.iter().any(|&a| a > PI)
    }

    /// `|sum - 2 pi|`.
    pub fn sum_residual(&self) -> f64 {
        (self.values.iter().sum::<f64>() - TAU).abs()
    }
}

/// Where the circumcenter lies relative to the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterPosition {
    Inside,
    Boundary,
    Outside,
}

impl CenterPosition {
    pub fn as_str(self) -> &'static str {
        match self {
            CenterPosition::Inside => "inside",
            CenterPosition::Boundary => "boundary",
            CenterPosition::Outside => "outside",
        }
    }
}

impl fmt::Display for CenterPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumConfig {
    pub radius: f64,
    pub center_position: CenterPosition,
}

/// Exact area, generalized-Heron approximation and their ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub exact: f64,
    pub approx: f64,
    pub ratio: f64,
    pub rel_error: f64,
}

impl AreaReport {
    pub fn new(exact: f64, approx: f64) -> AreaReport {
        let ratio = approx / exact;
        AreaReport {
            exact,
            approx,
            ratio,
            rel_error: ratio - 1.0,
        }
    }
}

/// Drops zero sides and checks that the rest can close into a polygon.
pub fn validate_sides(raw: &[f64]) -> Result<SideLengths> {
    let mut values = Vec::with_capacity(raw.len());
    for (index, &value) in raw.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFiniteSide { index, value });
        }
        if value < 0.0 {
            return Err(Error::NonPositiveSide { index, value });
        }
        if value > 0.0 {
            values.push(value);
        }
    }
    if values.len() < 3 {
        return Err(Error::TooFewSides {
            count: values.len(),
        });
    }
    let total: f64 = values.iter().sum();
    let (max_pos, &max) =
        values.iter().enumerate().fold(
            (0, &values[0]),
            |acc, (i, x)| if *x > *acc.1 { (i, x) } else { acc },
        );
    let rest = total - max;
    if max >= rest {
        // report the position in the caller's list, not the stripped one
        let index = raw
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0.0)
            .nth(max_pos)
            .map(|(i, _)| i)
            .unwrap_or(max_pos);
        return Err(Error::PolygonInequalityViolated {
            index,
            value: max,
            rest,
        });
    }
    Ok(SideLengths { values })
}

/// Half of the central angle subtended by a chord of length `2 * half_chord`.
///
/// Written with `atan2` so that chords close to a diameter keep full accuracy.
fn half_angle(half_chord: f64, radius: f64) -> f64 {
    let cos_part = ((radius - half_chord) * (radius + half_chord))
        .max(0.0)
        .sqrt();
    half_chord.atan2(cos_part)
}

fn half_angle_slope(half_chord: f64, radius: f64) -> f64 {
    let cos_part = ((radius - half_chord) * (radius + half_chord))
        .max(0.0)
        .sqrt();
    -half_chord / (radius * cos_part)
}

pub(crate) fn check_radius(radius: f64) -> Result<()> {
    if radius.is_finite() && radius > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(radius))
    }
}

/// Recovers the circumradius and classifies the circumcenter.
pub fn solve_circumradius(sides: &SideLengths) -> Result<CircumConfig> {
    let x = sides.as_slice();
    let m = sides.max_index();
    let r0 = 0.5 * x[m];
    let halves: Vec<f64> = x.iter().map(|v| 0.5 * v).collect();

    // angle-sum surplus at the smallest feasible radius
    let others_at_r0: f64 = halves
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != m)
        .map(|(_, &h)| half_angle(h, r0))
        .sum();
    let surplus = FRAC_PI_2 + others_at_r0 - PI;

    if surplus.abs() < BOUNDARY_TOL {
        return Ok(CircumConfig {
            radius: r0,
            center_position: CenterPosition::Boundary,
        });
    }

    let position = if surplus > 0.0 {
        CenterPosition::Inside
    } else {
        CenterPosition::Outside
    };

    // Inside: sum_i half_i(R) - pi, decreasing from surplus > 0 to -pi.
    // Outside: sum_{i != m} half_i(R) - half_m(R), rising from surplus < 0 to 0+.
    let governing = |r: f64| -> f64 {
        match position {
            CenterPosition::Outside => {
                let others: f64 = halves
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != m)
                    .map(|(_, &h)| half_angle(h, r))
                    .sum();
                others - half_angle(halves[m], r)
            }
            _ => halves.iter().map(|&h| half_angle(h, r)).sum::<f64>() - PI,
        }
    };
    let slope = |r: f64| -> f64 {
        match position {
            CenterPosition::Outside => {
                let others: f64 = halves
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != m)
                    .map(|(_, &h)| half_angle_slope(h, r))
                    .sum();
                others - half_angle_slope(halves[m], r)
            }
            _ => halves.iter().map(|&h| half_angle_slope(h, r)).sum(),
        }
    };

    let lo = r0;
    let mut hi = x[m];
    let mut doublings = 0;
    while governing(hi).signum() == surplus.signum() {
        hi *= 2.0;
        doublings += 1;
        if !hi.is_finite() || doublings > 2000 {
            return Err(Error::ConvergenceFailure {
                iterations: doublings,
            });
        }
    }

    let solver = Bisection::default();
    let root = solver
        .solve(governing, slope, lo, hi)
        .ok_or(Error::ConvergenceFailure {
            iterations: solver.max_iter,
        })?;

    let center_position = if (root.x - r0).abs() <= BOUNDARY_TOL * r0 {
        CenterPosition::Boundary
    } else {
        position
    };
    Ok(CircumConfig {
        radius: root.x,
        center_position,
    })
}

/// Central angles of `sides` on the circle described by `config`.
pub fn central_angles(sides: &SideLengths, config: &CircumConfig) -> Result<CentralAngles> {
    let radius = config.radius;
    check_radius(radius)?;
    let x = sides.as_slice();
    for (index, &side) in x.iter().enumerate() {
        if 0.5 * side > radius {
            return Err(Error::InconsistentConfig {
                index,
                side,
                radius,
            });
        }
    }
    let mut angles: Vec<f64> = x
        .iter()
        .map(|&s| 2.0 * half_angle(0.5 * s, radius))
        .collect();
    if config.center_position == CenterPosition::Outside {
        let m = sides.max_index();
        let others: f64 = angles
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != m)
            .map(|(_, a)| a)
            .sum();
        angles[m] = TAU - others;
    }
    CentralAngles::new(angles)
}

/// Chord lengths `2 R sin(alpha_i / 2)`.
pub fn sides_from_angles(angles: &CentralAngles, radius: f64) -> Result<SideLengths> {
    check_radius(radius)?;
    let raw: Vec<f64> = angles
        .as_slice()
        .iter()
        .map(|&a| 2.0 * radius * (0.5 * a).sin())
        .collect();
    validate_sides(&raw)
}

/// Area `(R^2 / 2) * sum(sin alpha_i)`. A reflex angle contributes a negative
/// term, which is the correct signed area when the center lies outside.
pub fn exact_area_from_angles(angles: &CentralAngles, radius: f64) -> Result<f64> {
    check_radius(radius)?;
    let r2 = radius * radius;
    let area = 0.5 * r2 * angles.as_slice().iter().map(|a| a.sin()).sum::<f64>();
    if area <= 1e-15 * r2 {
        return Err(Error::DegenerateArea { area });
    }
    Ok(area)
}

pub fn exact_area_from_sides(sides: &SideLengths) -> Result<f64> {
    let config = solve_circumradius(sides)?;
    let angles = central_angles(sides, &config)?;
    exact_area_from_angles(&angles, config.radius)
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sides(v: &[f64]) -> SideLengths {
        validate_sides(v).unwrap()
    }

    fn angles(v: &[f64]) -> CentralAngles {
        CentralAngles::new(v.to_vec()).unwrap()
    }

    fn reflex_quad_sides() -> SideLengths {
        sides(&[1.41421356, 0.51763809, 0.51763809, 0.51763809])
    }

    #[test]
    fn validate_accepts_triangle() {
        assert_eq!(sides(&[3.0, 4.0, 5.0]).as_slice(), &[3.0, 4.0, 5.0]);
    }

    #[test]
    fn validate_strips_zeros_in_order() {
        assert_eq!(sides(&[1.0, 1.0, 0.0, 1.0]).as_slice(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn validate_rejects_long_side() {
        match validate_sides(&[10.0, 1.0, 1.0, 1.0]) {
            Err(Error::PolygonInequalityViolated { index, value, rest }) => {
                assert_eq!(index, 0);
                assert_eq!(value, 10.0);
                assert_eq!(rest, 3.0);
            }
            other => panic!("unexpected {other:?}"),
        }
        // equality is not enough
        assert!(matches!(
            validate_sides(&[2.0, 1.0, 1.0]),
            Err(Error::PolygonInequalityViolated { .. })
        ));
    }

    #[test]
    fn validate_reports_original_index() {
        match validate_sides(&[0.0, 1.0, 0.0, 9.0, 1.0, 1.0]) {
            Err(Error::PolygonInequalityViolated { index, .. }) => assert_eq!(index, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validate_error_paths() {
        assert_eq!(
            validate_sides(&[1.0, -2.0, 1.0]),
            Err(Error::NonPositiveSide {
                index: 1,
                value: -2.0
            })
        );
        assert_eq!(
            validate_sides(&[1.0, 0.0, 1.0]),
            Err(Error::TooFewSides { count: 2 })
        );
        assert!(matches!(
            validate_sides(&[1.0, f64::NAN, 1.0]),
            Err(Error::NonFiniteSide { index: 1, .. })
        ));
    }

    #[test]
    fn angles_reject_bad_input() {
        assert!(CentralAngles::new(vec![PI, PI]).is_err());
        assert!(CentralAngles::new(vec![1.0, 1.0, 1.0]).is_err());
        assert!(CentralAngles::new(vec![0.0, PI, PI]).is_err());
    }

    #[test]
    fn radius_right_triangle_is_boundary() {
        let c = solve_circumradius(&sides(&[3.0, 4.0, 5.0])).unwrap();
        assert_relative_eq!(c.radius, 2.5, max_relative = 1e-14);
        assert_eq!(c.center_position, CenterPosition::Boundary);
    }

    #[test]
    fn radius_half_hexagon_is_boundary() {
        let c = solve_circumradius(&sides(&[2.0, 1.0, 1.0, 1.0])).unwrap();
        assert_relative_eq!(c.radius, 1.0, max_relative = 1e-14);
        assert_eq!(c.center_position, CenterPosition::Boundary);
    }

    #[test]
    fn radius_regular_hexagon_is_inside() {
        let c = solve_circumradius(&sides(&[1.0; 6])).unwrap();
        assert_relative_eq!(c.radius, 1.0, max_relative = 1e-13);
        assert_eq!(c.center_position, CenterPosition::Inside);
    }

    #[test]
    fn radius_reflex_quad_is_outside() {
        let c = solve_circumradius(&reflex_quad_sides()).unwrap();
        // inputs are rounded to 8 decimals
        assert_relative_eq!(c.radius, 1.0, max_relative = 1e-7);
        assert_eq!(c.center_position, CenterPosition::Outside);
    }

    #[test]
    fn solver_residual_is_small() {
        for v in [
            vec![1.0; 6],
            vec![3.0, 4.0, 5.0],
            vec![1.41421356, 0.51763809, 0.51763809, 0.51763809],
            vec![2.0, 3.0, 4.0],
            vec![1.0, 2.0, 3.0, 4.0, 5.0],
        ] {
            let s = sides(&v);
            let c = solve_circumradius(&s).unwrap();
            let a = central_angles(&s, &c).unwrap();
            let m = s.max_index();
            let halves: Vec<f64> = s
                .as_slice()
                .iter()
                .map(|x| (x / (2.0 * c.radius)).min(1.0).asin())
                .collect();
            let residual = match c.center_position {
                CenterPosition::Outside => {
                    halves
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != m)
                        .map(|(_, h)| h)
                        .sum::<f64>()
                        - halves[m]
                }
                _ => 2.0 * halves.iter().sum::<f64>() - TAU,
            };
            assert!(residual.abs() < 1e-12, "{v:?}: residual {residual}");
            assert!(a.sum_residual() < ANGLE_SUM_TOL);
        }
    }

    #[test]
    fn angles_of_hexagon() {
        let s = sides(&[1.0; 6]);
        let a = central_angles(
            &s,
            &CircumConfig {
                radius: 1.0,
                center_position: CenterPosition::Inside,
            },
        )
        .unwrap();
        for &v in a.as_slice() {
            assert_relative_eq!(v, PI / 3.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn angles_of_right_triangle() {
        let s = sides(&[3.0, 4.0, 5.0]);
        let c = solve_circumradius(&s).unwrap();
        let a = central_angles(&s, &c).unwrap();
        let expected = [2.0 * (0.6f64).asin(), 2.0 * (0.8f64).asin(), PI];
        for (got, want) in a.as_slice().iter().zip(expected) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
        assert_relative_eq!(a.as_slice()[0], 1.287002, epsilon = 1e-6);
        assert_relative_eq!(a.as_slice()[1], 1.854590, epsilon = 1e-6);
        assert!(a.sum_residual() < 1e-10);
    }

    #[test]
    fn angles_of_reflex_quad_round_trip() {
        let exact = angles(&[1.5 * PI, PI / 6.0, PI / 6.0, PI / 6.0]);
        let s = sides_from_angles(&exact, 1.0).unwrap();
        let c = solve_circumradius(&s).unwrap();
        assert_eq!(c.center_position, CenterPosition::Outside);
        let a = central_angles(&s, &c).unwrap();
        assert!(a.has_reflex());
        for (got, want) in a.as_slice().iter().zip(exact.as_slice()) {
            assert_relative_eq!(*got, *want, max_relative = 1e-12);
        }
    }

    #[test]
    fn inconsistent_config_is_rejected() {
        let s = sides(&[3.0, 4.0, 5.0]);
        let bad = CircumConfig {
            radius: 2.0,
            center_position: CenterPosition::Inside,
        };
        assert_eq!(
            central_angles(&s, &bad),
            Err(Error::InconsistentConfig {
                index: 2,
                side: 5.0,
                radius: 2.0
            })
        );
    }

    #[test]
    fn sides_from_known_angles() {
        let s = sides_from_angles(&angles(&[PI / 3.0; 6]), 1.0).unwrap();
        for &x in s.as_slice() {
            assert_relative_eq!(x, 1.0, max_relative = 1e-15);
        }
        let s = sides_from_angles(&angles(&[PI, PI / 3.0, PI / 3.0, PI / 3.0]), 1.0).unwrap();
        let want = [2.0, 1.0, 1.0, 1.0];
        for (x, w) in s.as_slice().iter().zip(want) {
            assert_relative_eq!(*x, w, max_relative = 1e-15);
        }
        let s = sides_from_angles(&angles(&[1.5 * PI, PI / 6.0, PI / 6.0, PI / 6.0]), 1.0).unwrap();
        assert_relative_eq!(s.as_slice()[0], 2f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(s.as_slice()[1], 0.51763809, epsilon = 1e-8);
    }

    #[test]
    fn area_from_angles_examples() {
        assert_relative_eq!(
            exact_area_from_angles(&angles(&[PI / 3.0; 6]), 1.0).unwrap(),
            1.5 * 3f64.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            exact_area_from_angles(&angles(&[1.5 * PI, PI / 6.0, PI / 6.0, PI / 6.0]), 1.0)
                .unwrap(),
            0.25,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            exact_area_from_angles(&angles(&[PI, PI / 3.0, PI / 3.0, PI / 3.0]), 1.0).unwrap(),
            0.75 * 3f64.sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn collapsed_area_is_reported() {
        let tiny = 1e-9;
        let a = angles(&[TAU - 2.0 * tiny, tiny, tiny]);
        assert!(matches!(
            exact_area_from_angles(&a, 1.0),
            Err(Error::DegenerateArea { .. })
        ));
    }

    #[test]
    fn area_from_sides_examples() {
        assert_relative_eq!(
            exact_area_from_sides(&sides(&[3.0, 4.0, 5.0])).unwrap(),
            6.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            exact_area_from_sides(&sides(&[1.0; 6])).unwrap(),
            1.5 * 3f64.sqrt(),
            max_relative = 1e-12
        );
        let pentagon = 1.25 / (PI / 5.0).tan();
        assert_relative_eq!(
            exact_area_from_sides(&sides(&[1.0; 5])).unwrap(),
            pentagon,
            max_relative = 1e-12
        );
        assert_relative_eq!(pentagon, 1.7204774, epsilon = 1e-7);
    }

    #[test]
    fn invalid_radius() {
        assert_eq!(
            sides_from_angles(&angles(&[PI / 3.0; 6]), -1.0),
            Err(Error::InvalidRadius(-1.0))
        );
    }
}
