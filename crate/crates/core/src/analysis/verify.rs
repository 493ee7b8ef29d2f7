use rayon::prelude::*;

use super::sampling::sample_angles_seeded;
use super::{heron_limit, ratio_from_angles};
use crate::error::{Error, Result};
use crate::polygon::CentralAngles;

/// Slack applied to the `[1, pi/e]` band before a sample counts as a breach.
pub const BAND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub angles: CentralAngles,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub allow_reflex: bool,
    /// Samples whose exact area collapsed numerically.
    pub skipped: u64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub argmin: Option<CentralAngles>,
    pub argmax: Option<CentralAngles>,
    pub upper_violations: Vec<Violation>,
    pub lower_violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn has_violations(&self) -> bool {
        !self.upper_violations.is_empty() || !self.lower_violations.is_empty()
    }
}

/// Samples `samples` angle vectors on the unit circle and records the range
/// of `D_n` along with every sample outside `[1, pi/e]`.
///
/// Sample `i` is drawn from its own generator stream, and the reduction runs
/// in index order, so the report is the same for any thread count.
pub fn monte_carlo_verify(
    n: usize,
    samples: u64,
    seed: u64,
    allow_reflex: bool,
) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if n < 3 {
        return Err(Error::TooFewSides { count: n });
    }

    let evaluated: Vec<Option<(CentralAngles, f64)>> = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<Option<(CentralAngles, f64)>> {
            let angles = sample_angles_seeded(n, seed, i, allow_reflex)?;
            match ratio_from_angles(&angles) {
                Ok(r) => Ok(Some((angles, r.ratio))),
                Err(Error::DegenerateArea { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;

    let upper = heron_limit() + BAND_TOL;
    let lower = 1.0 - BAND_TOL;
    let mut report = VerifyReport {
        n,
        samples,
        seed,
        allow_reflex,
        skipped: 0,
        min_ratio: f64::NAN,
        max_ratio: f64::NAN,
        argmin: None,
        argmax: None,
        upper_violations: Vec::new(),
        lower_violations: Vec::new(),
    };
    for item in evaluated {
        let Some((angles, ratio)) = item else {
            report.skipped += 1;
            continue;
        };
        if report.argmin.is_none() || ratio < report.min_ratio {
            report.min_ratio = ratio;
            report.argmin = Some(angles.clone());
        }
        if report.argmax.is_none() || ratio > report.max_ratio {
            report.max_ratio = ratio;
            report.argmax = Some(angles.clone());
        }
        if ratio > upper {
            report.upper_violations.push(Violation { angles, ratio });
        } else if ratio < lower {
            report.lower_violations.push(Violation { angles, ratio });
        }
    }
    Ok(report)
}
