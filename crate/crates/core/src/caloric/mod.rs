//! Generators and exact verifiers for homogeneous caloric polynomials.

mod basic;
mod checks;
mod factors;
mod hermite;
mod inner;

use thiserror::Error;

use crate::polyring::PolyError;

pub use basic::{basic_hcp, basis, basis_with_indices, multi_indices, product_hcp, MultiIndex};
pub use checks::{chain_check, eigen_check, is_caloric, ChainLevel, ChainReport};
pub use factors::{interlacing_check, parabola_factors, LeadingFactor, ParabolaFactors};
pub use hermite::{hermite, hermite_relation_check};
pub use inner::{gaussian_moment, weighted_inner_product, WeightedInnerProduct};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CaloricError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("not caloric: heat operator leaves {residual}")]
    NotCaloric { residual: String },
    #[error("Hermite relation fails at degree {degree}, coefficient of x^{power}: {left} vs {right}")]
    HermiteMismatch { degree: u32, power: u32, left: String, right: String },
    #[error("coefficient chain breaks at level {level}: residual {residual}")]
    ChainBroken { level: u32, residual: String },
    #[error("eigenfunction identity fails: residual {residual}")]
    EigenResidual { residual: String },
    #[error("root finder did not converge for degree {degree} within {iterations} iterations")]
    NoConvergence { degree: u32, iterations: usize },
    #[error("parabola factors of degree {degree} reconstruct with error {error:e} (tolerance {tol:e})")]
    FactorMismatch { degree: u32, error: f64, tol: f64 },
    #[error("interlacing fails between degrees {lower} and {upper}: {left} !< {right} (margin {tol:e})")]
    InterlacingViolation { lower: u32, upper: u32, left: f64, right: f64, tol: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
