use serde::Serialize;

use super::NodalError;
use crate::polyring::FloatEvaluator;
use crate::RatPoly;

/// Values this close to zero are re-sampled at nearby angles.
pub const GUARD_BAND: f64 = 1e-12;
pub const MAX_REFINEMENTS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pole {
    North,
    South,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolarChamberReport {
    pub pole: Pole,
    pub rho: f64,
    pub sign_changes: usize,
    /// Positive chambers met by the circle.
    pub n_plus: usize,
}

/// Signs of `p` around the circle `x^2 + y^2 = rho^2`,
/// `t = +-sqrt(1 - rho^2)`, near a pole of the unit sphere in `R^{2+1}`.
pub fn polar_chambers(p: &RatPoly, pole: Pole, rho: f64, samples: usize) -> Result<PolarChamberReport, NodalError> {
    if p.spatial_dim() != 2 {
        return Err(NodalError::UnsupportedDimension { n: p.spatial_dim() });
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(NodalError::Precondition(format!("rho must lie in (0, 1), got {rho}")));
    }
    let d = p.parabolic_degree()? as usize;
    let min_samples = (8 * d).max(8);
    if samples < min_samples {
        return Err(NodalError::Precondition(format!("need at least {min_samples} samples, got {samples}")));
    }
    let t = match pole {
        Pole::North => (1.0 - rho * rho).sqrt(),
        Pole::South => -(1.0 - rho * rho).sqrt(),
    };
    let eval = FloatEvaluator::new(p);
    let step = std::f64::consts::TAU / samples as f64;
    let at = |theta: f64| eval.eval(&[rho * theta.cos(), rho * theta.sin(), t]);

    let mut signs = Vec::with_capacity(samples);
    for j in 0..samples {
        let theta = (j as f64 + 0.5) * step;
        let mut v = at(theta);
        let mut offset = step / 2.0;
        let mut tries = 0;
        while v.abs() < GUARD_BAND && tries < MAX_REFINEMENTS {
            v = at(theta + offset);
            offset /= 2.0;
            tries += 1;
        }
        if v.abs() < GUARD_BAND {
            return Err(NodalError::UnresolvedSign { angle: theta });
        }
        signs.push(v > 0.0);
    }
    let sign_changes = (0..samples).filter(|&j| signs[j] != signs[(j + 1) % samples]).count();
    let n_plus = if sign_changes == 0 { usize::from(signs[0]) } else { sign_changes / 2 };
    Ok(PolarChamberReport { pole, rho, sign_changes, n_plus })
}
