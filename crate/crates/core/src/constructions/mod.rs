//! Explicit families of homogeneous caloric polynomials: the small-nodal-set
//! perturbations, the product family, and the printed fixtures.

mod families;
mod fixtures;
mod harmonic;
mod scan;
mod spec;

use thiserror::Error;

use crate::caloric::CaloricError;
use crate::nodal::NodalError;
use crate::polyring::PolyError;

pub use families::{high_dim, high_dim_in, lewy_2mod4, odd_construction, product_lower, rational_rotation, zero_mod4};
pub use fixtures::{fixture, MAX_BASIC_FIXTURE, NAMED_FIXTURES};
pub use harmonic::{harmonic_2d, HarmonicKind, HarmonicSeed};
pub use scan::{default_eps_grid, scan_epsilon, ScanReport, ScanRow};
pub use spec::{default_epsilon, Built, ConstructionSpec, Family, Rotation};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Caloric(#[from] CaloricError),
    #[error(transparent)]
    Nodal(#[from] NodalError),
    #[error("{family} needs {rule}, got d = {d}")]
    Congruence { family: &'static str, d: u32, rule: &'static str },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("no admissible epsilon in the scanned grid")]
    NoAdmissibleEpsilon,
    #[error("{0}")]
    Precondition(String),
}
