use serde::Serialize;

use super::components::ComponentReport;
use super::NodalError;
use crate::polyring::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub d: u32,
    /// Fewest nodal domains of a degree-`d` caloric polynomial in `R^{n+1}`.
    pub min_domains: u64,
    /// `floor(d/n)^n`, attained by products of basic polynomials.
    pub lower: u128,
    /// `C(n+d, n)`.
    pub upper: u128,
    pub counted: Option<usize>,
}

pub fn min_domains(n: usize, d: u32) -> u64 {
    match n {
        1 => 2 * u64::from(d.div_ceil(2)),
        2 if d.is_multiple_of(4) => 3,
        _ => 2,
    }
}

/// Bounds for degree `d` in `R^{n+1}`; a supplied count must lie in
/// `[min_domains, upper]`.
pub fn bounds_report(n: usize, d: u32, counted: Option<&ComponentReport>) -> Result<BoundsReport, NodalError> {
    bounds_for_count(n, d, counted.map(|c| c.total))
}

/// [`bounds_report`] for a bare count.
pub fn bounds_for_count(n: usize, d: u32, counted: Option<usize>) -> Result<BoundsReport, NodalError> {
    if n == 0 || d < 2 {
        return Err(NodalError::Precondition(format!("bounds need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    let report = BoundsReport {
        n,
        d,
        min_domains: min_domains(n, d),
        lower: u128::from(d / n as u32).pow(n as u32),
        upper: binomial(n as u64 + u64::from(d), n as u64),
        counted,
    };
    if let Some(total) = report.counted {
        if (total as u128) < u128::from(report.min_domains) || total as u128 > report.upper {
            return Err(NodalError::BoundViolation {
                count: total,
                min: report.min_domains,
                upper: report.upper,
            });
        }
    }
    Ok(report)
}
