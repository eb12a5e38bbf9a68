use num_bigint::BigInt;

use super::CaloricError;
use crate::polyring::PolyError;
use crate::{RatPoly, Rational};

/// Passes iff `p` is parabolically homogeneous and killed by the heat
/// operator; returns the degree.
pub fn is_caloric(p: &RatPoly) -> Result<u32, CaloricError> {
    let d = p.parabolic_degree()?;
    let residual = p.heat_apply();
    if residual.is_zero() {
        Ok(d)
    } else {
        Err(CaloricError::NotCaloric { residual: residual.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLevel {
    /// `j` for the relation `j p_j = Laplacian p_{j-1}`; the top level
    /// `m` additionally records `Laplacian p_m = 0`.
    pub level: u32,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub t_degree: u32,
    pub levels: Vec<ChainLevel>,
}

/// Verifies the coefficient chain of `p = sum_j t^j p_j`:
/// `Laplacian p_m = 0` and `j p_j = Laplacian p_{j-1}` for `j = m, ..., 1`.
pub fn chain_check(p: &RatPoly) -> Result<ChainReport, CaloricError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let coeffs = p.t_coefficients();
    let m = (coeffs.len() - 1) as u32;
    let at = |j: u32| &coeffs[(m - j) as usize];
    let mut levels = Vec::with_capacity(coeffs.len());

    let top = at(m).laplacian();
    if !top.is_zero() {
        return Err(CaloricError::ChainBroken { level: m, residual: top.to_string() });
    }
    levels.push(ChainLevel { level: m, relation: format!("Laplacian p_{m} = 0") });

    for j in (1..=m).rev() {
        let lhs = at(j).scale(&Rational::from_integer(BigInt::from(j)));
        let residual = &lhs - &at(j - 1).laplacian();
        if !residual.is_zero() {
            return Err(CaloricError::ChainBroken { level: j, residual: residual.to_string() });
        }
        levels.push(ChainLevel { level: j, relation: format!("{j} p_{j} = Laplacian p_{}", j - 1) });
    }
    Ok(ChainReport { t_degree: m, levels })
}

/// With `v(x) = p(x, -1)` for a caloric `p` of degree `d`, checks
/// `Laplacian v - (1/2) x . grad v + (d/2) v = 0` exactly.
pub fn eigen_check(p: &RatPoly) -> Result<(), CaloricError> {
    let d = is_caloric(p)?;
    let v = p.at_time(&Rational::from_integer(BigInt::from(-1)));
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let half_d = Rational::new(BigInt::from(d), BigInt::from(2));
    let residual = &(&v.laplacian() - &v.radial_derivative().scale(&half)) + &v.scale(&half_d);
    if residual.is_zero() {
        Ok(())
    } else {
        Err(CaloricError::EigenResidual { residual: residual.to_string() })
    }
}
