//! Areas of cyclic polygons from their side lengths.
//!
//! The exact area comes from recovering the circumradius and central angles.
//! The approximation is the generalized Heron formula
//! `S_n = sqrt(P^(4-n) (P - x_1) ... (P - x_n))`, exact for triangles and
//! cyclic quadrilaterals. The [`analysis`] module studies the ratio
//! `S_n / A_n`, which for regular polygons rises towards `pi / e`.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod heron;
pub mod output;
pub mod polygon;
mod root;

pub use error::{Error, Result};
pub use heron::{generalized_heron, heron_from_angles, HeronResult};
pub use polygon::{
    central_angles, exact_area_from_angles, exact_area_from_sides, sides_from_angles,
    solve_circumradius, validate_sides, AreaReport, CenterPosition, CentralAngles, CircumConfig,
    SideLengths,
};
