//! Nodal-domain counting for parabolically homogeneous polynomials.
//!
//! Counts come from exact-sign sampling on the boundary of `[-1, 1]^{n+1}`
//! and are stabilized across resolutions. They are heuristic, not
//! certified.

mod bounds;
mod components;
mod export;
mod grid;
mod polar;
mod sign;
mod slice;
mod union_find;

use thiserror::Error;

use crate::PolyError;

pub use bounds::{bounds_for_count, bounds_report, min_domains, BoundsReport};
pub use components::{count_components, default_schedule, degree_schedule, nodal_count, ComponentReport, METHOD_CUBE_EXACT};
pub use export::{export_nodal_pointcloud, pointcloud_csv, MAX_SHELL_GAP};
pub use grid::{cube_section_sample, CrossSectionGrid, SignField, MAX_COUNT_DEGREE, ZERO_FRACTION_LIMIT};
pub use polar::{polar_chambers, PolarChamberReport, Pole, GUARD_BAND, MAX_REFINEMENTS};
pub use slice::{default_slice_half_width, slice_count, SliceReport};
pub use union_find::UnionFind;

#[derive(Debug, Error)]
pub enum NodalError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{n} spatial variables not supported here")]
    UnsupportedDimension { n: usize },
    #[error("invalid resolution schedule: {0}")]
    InvalidSchedule(String),
    #[error("{0}")]
    Precondition(String),
    #[error("sign unresolved near angle {angle}")]
    UnresolvedSign { angle: f64 },
    #[error("count {count} outside [{min}, {upper}]")]
    BoundViolation { count: usize, min: u64, upper: u128 },
}
