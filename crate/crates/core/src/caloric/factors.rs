//! Factorization of `p_d` into nested parabolas `t + a x^2`.
//!
//! The positive roots `r_i` of `H_d` are the eigenvalues of the symmetric
//! tridiagonal Jacobi matrix of the Hermite recurrence, polished with
//! Newton steps against the exact `H_d`; then `a_i = 1 / (4 r_i^2)`.

use nalgebra::DMatrix;
use serde::Serialize;

use super::{basic_hcp, hermite, CaloricError};
use crate::polyring::{ExponentVector, FloatEvaluator};
use crate::{F64Poly, Polynomial};

const EIGEN_ITERATIONS: usize = 10_000;
const NEWTON_ITERATIONS: usize = 8;
const RECONSTRUCTION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingFactor {
    None,
    X,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParabolaFactors {
    pub degree: u32,
    pub leading_factor: LeadingFactor,
    /// `a_{d,1} < ... < a_{d,k}`, `k = floor(d/2)`.
    pub coefficients: Vec<f64>,
    /// Largest coefficient difference between the reassembled product and `p_d`.
    pub reconstruction_error: f64,
}

impl ParabolaFactors {
    /// `x^(d mod 2) * prod_i (t + a_i x^2)` in double precision.
    pub fn reassemble(&self) -> F64Poly {
        let t = Polynomial::t(1);
        let x = Polynomial::x(1, 0);
        let x2 = &x * &x;
        let start = match self.leading_factor {
            LeadingFactor::X => x,
            LeadingFactor::None => Polynomial::one(1),
        };
        self.coefficients.iter().fold(start, |acc, &a| &acc * &(&t + &x2.scale(&a)))
    }
}

/// Positive roots of `H_d`, in increasing order.
fn hermite_positive_roots(d: u32) -> Result<Vec<f64>, CaloricError> {
    let size = d as usize;
    let mut jacobi = DMatrix::<f64>::zeros(size, size);
    for k in 1..size {
        let off = (k as f64 / 2.0).sqrt();
        jacobi[(k, k - 1)] = off;
        jacobi[(k - 1, k)] = off;
    }
    let eig = nalgebra::SymmetricEigen::try_new(jacobi, f64::EPSILON, EIGEN_ITERATIONS)
        .ok_or(CaloricError::NoConvergence { degree: d, iterations: EIGEN_ITERATIONS })?;

    let h = hermite(d);
    let dh = h.partial(crate::Var::X(0))?;
    let (h, dh) = (FloatEvaluator::new(&h), FloatEvaluator::new(&dh));

    let mut roots: Vec<f64> = eig.eigenvalues.iter().copied().filter(|&r| r > 1e-8).collect();
    for r in roots.iter_mut() {
        for _ in 0..NEWTON_ITERATIONS {
            let f = h.eval(&[*r, 0.0]);
            let df = dh.eval(&[*r, 0.0]);
            if df == 0.0 {
                break;
            }
            let candidate = *r - f / df;
            // keep a step only if it does not increase the residual
            if h.eval(&[candidate, 0.0]).abs() <= f.abs() && candidate.is_finite() {
                if candidate == *r {
                    break;
                }
                *r = candidate;
            } else {
                break;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    if roots.len() != (d / 2) as usize {
        return Err(CaloricError::NoConvergence { degree: d, iterations: EIGEN_ITERATIONS });
    }
    Ok(roots)
}

/// Numeric parabola coefficients `a_{d,i}` of `p_d`, checked by
/// reassembling the product and comparing with `p_d` coefficientwise.
pub fn parabola_factors(d: u32, tol: f64) -> Result<ParabolaFactors, CaloricError> {
    if d < 2 {
        return Err(CaloricError::Precondition(format!("parabola_factors needs d >= 2, got {d}")));
    }
    let roots = hermite_positive_roots(d)?;
    let mut coefficients: Vec<f64> = roots.iter().map(|r| 1.0 / (4.0 * r * r)).collect();
    coefficients.sort_by(f64::total_cmp);

    let mut factors = ParabolaFactors {
        degree: d,
        leading_factor: if d % 2 == 1 { LeadingFactor::X } else { LeadingFactor::None },
        coefficients,
        reconstruction_error: 0.0,
    };
    let exact: F64Poly = basic_hcp(d).convert();
    let approx = factors.reassemble();
    let error = (0..=d / 2)
        .map(|j| {
            let e = ExponentVector::new(j, vec![d - 2 * j]);
            (exact.coeff(&e) - approx.coeff(&e)).abs()
        })
        .fold(0.0, f64::max);
    factors.reconstruction_error = error;
    if error >= tol {
        return Err(CaloricError::FactorMismatch { degree: d, error, tol });
    }
    Ok(factors)
}

/// Checks strict interlacing between the factors of `p_{d-1}` and `p_d`:
/// for `d = 2k`, `b_1 < a_1 < b_2 < ... < a_{k-1} < b_k` with `a` from
/// `p_{2k-1}` and `b` from `p_{2k}`; for `d = 2k + 1`,
/// `c_1 < b_1 < ... < c_k < b_k` with `c` from `p_{2k+1}`, `b` from `p_{2k}`.
/// Every gap must exceed `tol`.
pub fn interlacing_check(d: u32, tol: f64) -> Result<(), CaloricError> {
    if d < 3 {
        return Err(CaloricError::Precondition(format!(
            "interlacing_check compares p_(d-1) with p_d and needs d >= 3, got {d}"
        )));
    }
    let lower = parabola_factors(d - 1, RECONSTRUCTION_TOL)?;
    let upper = parabola_factors(d, RECONSTRUCTION_TOL)?;
    // In both parities the higher degree supplies the smallest coefficient.
    let (first, second) = (&upper.coefficients, &lower.coefficients);
    let mut merged = Vec::with_capacity(first.len() + second.len());
    for i in 0..first.len().max(second.len()) {
        if let Some(&v) = first.get(i) {
            merged.push(v);
        }
        if let Some(&v) = second.get(i) {
            merged.push(v);
        }
    }
    for w in merged.windows(2) {
        if w[1] - w[0] <= tol {
            return Err(CaloricError::InterlacingViolation { lower: d - 1, upper: d, left: w[0], right: w[1], tol });
        }
    }
    Ok(())
}
