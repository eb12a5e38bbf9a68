//! Components of the time slice `{x in [-R, R]^n : p(x, -1) != 0}`.
//!
//! Every nodal domain of an hcp meets `{t = -1}`, so the slice count bounds
//! the nodal count from above as long as no slice component lies outside
//! the box. The caveat flag is raised when doubling the box changes the
//! count.

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::sign::{quarter_ceiling, ExactSigner};
use super::union_find::UnionFind;
use super::NodalError;
use crate::caloric::parabola_factors;
use crate::{RatPoly, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceReport {
    pub count: usize,
    pub positive: usize,
    pub negative: usize,
    pub half_width: f64,
    pub resolution: usize,
    /// Count in the doubled box at the same cell size.
    pub doubled_count: usize,
    pub caveat: bool,
}

impl SliceReport {
    /// `nodal_total <= count`, when the caveat flag is clear.
    pub fn bound_holds(&self, nodal_total: usize) -> Option<bool> {
        (!self.caveat).then_some(nodal_total <= self.count)
    }
}

/// `2 (1 + a_min^{-1/2})` with `a_min` the smallest parabola coefficient of
/// `p_d`: twice the outermost root of `p_d(x, -1)`, plus margin.
pub fn default_slice_half_width(d: u32) -> f64 {
    match parabola_factors(d, 1e-8) {
        Ok(f) => 2.0 * (1.0 + f.coefficients.first().map_or(0.0, |a| 1.0 / a.sqrt())),
        Err(_) => 2.0,
    }
}

/// Same-sign components of the box grid; as on the cross-section, a cell
/// counts only when all its vertices share one exact sign.
fn label_box(v: &RatPoly, half_width: (i64, i64), res: usize) -> (usize, usize) {
    let n = v.spatial_dim();
    let signer = ExactSigner::new(v);
    let (rn, rd) = half_width;
    let den = rd * res as i64;
    let side = res + 1;
    let vertex_signs: Vec<i8> = (0..side.pow(n as u32))
        .into_par_iter()
        .with_min_len(1024)
        .map(|vertex| {
            let mut rest = vertex;
            let mut nums = Vec::with_capacity(n + 1);
            for _ in 0..n {
                nums.push(rn * (2 * (rest % side) as i64 - res as i64));
                rest /= side;
            }
            nums.push(0);
            signer.sign(&nums, den)
        })
        .collect();
    let cells = res.pow(n as u32);
    let signs: Vec<i8> = (0..cells)
        .map(|cell| {
            let mut rest = cell;
            let mut base = 0;
            let mut stride = 1;
            for _ in 0..n {
                base += (rest % res) * stride;
                rest /= res;
                stride *= side;
            }
            let first = vertex_signs[base];
            let uniform = (0..1usize << n).all(|mask| {
                let offset: usize = (0..n).filter(|a| mask >> a & 1 == 1).map(|a| side.pow(a as u32)).sum();
                vertex_signs[base + offset] == first
            });
            if uniform {
                first
            } else {
                0
            }
        })
        .collect();
    let mut uf = UnionFind::new(cells);
    let mut stride = 1;
    for _axis in 0..n {
        for cell in 0..cells {
            let i = (cell / stride) % res;
            if i + 1 < res {
                let nb = cell + stride;
                if signs[cell] != 0 && signs[cell] == signs[nb] {
                    uf.union(cell, nb);
                }
            }
        }
        stride *= res;
    }
    let (mut pos, mut neg) = (0, 0);
    for (cell, &sign) in signs.iter().enumerate().take(cells) {
        if sign != 0 && uf.find(cell) == cell {
            if sign > 0 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
    }
    (pos, neg)
}

pub fn slice_count(p: &RatPoly, half_width: f64, resolution: usize) -> Result<SliceReport, NodalError> {
    let n = p.spatial_dim();
    if !(1..=3).contains(&n) {
        return Err(NodalError::UnsupportedDimension { n });
    }
    if p.parabolic_degree()? > super::grid::MAX_COUNT_DEGREE {
        return Err(NodalError::Precondition("degree exceeds the counting cap".into()));
    }
    if half_width.is_nan() || half_width <= 0.0 || resolution < 2 {
        return Err(NodalError::Precondition("slice box needs R > 0 and resolution >= 2".into()));
    }
    let v = p.at_time(&-Rational::one());
    let (rn, rd) = quarter_ceiling(half_width);
    let (pos, neg) = label_box(&v, (rn, rd), resolution);
    let (dpos, dneg) = label_box(&v, (2 * rn, rd), 2 * resolution);
    Ok(SliceReport {
        count: pos + neg,
        positive: pos,
        negative: neg,
        half_width: rn as f64 / rd as f64,
        resolution,
        doubled_count: dpos + dneg,
        caveat: dpos + dneg != pos + neg,
    })
}
