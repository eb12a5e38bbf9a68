//! Exact signs of a rational polynomial at rational points sharing one
//! denominator.
//!
//! A double-precision evaluation with a forward error bound settles almost
//! every point; points within the bound are re-evaluated in exact integer
//! arithmetic. Either way the returned sign is the sign of the exact value.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{RatPoly, Scalar};

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Point dimension `n + 1` handled by the signer.
const MAX_DIM: usize = 4;
/// Largest exponent of a single variable.
const MAX_EXP: usize = 128;

struct Term {
    /// Exponents in point order `(x1, ..., xn, t)`.
    exps: Vec<u32>,
    approx: f64,
    /// Coefficient times the common denominator of all coefficients.
    integral: BigInt,
}

pub(crate) struct ExactSigner {
    dim: usize,
    degree: u32,
    max_exp: Vec<u32>,
    terms: Vec<Term>,
    filter_factor: f64,
}

impl ExactSigner {
    pub(crate) fn new(p: &RatPoly) -> Self {
        let n = p.spatial_dim();
        let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms: Vec<Term> = p
            .terms()
            .map(|(e, c)| {
                let mut exps = e.space_exps.clone();
                exps.push(e.t_exp);
                let integral = c.numer() * (&lcm / c.denom());
                Term { exps, approx: c.to_f64(), integral }
            })
            .collect();
        let mut max_exp = vec![0; n + 1];
        for t in &terms {
            for (m, &e) in max_exp.iter_mut().zip(&t.exps) {
                *m = (*m).max(e);
            }
        }
        assert!(n < MAX_DIM, "at most {} space variables", MAX_DIM - 1);
        assert!(max_exp.iter().all(|&e| e as usize <= MAX_EXP), "exponent above {MAX_EXP}");
        let degree = p.total_degree();
        let filter_factor = 2.0 * (2.0 * degree as f64 + terms.len() as f64 + 4.0) * UNIT_ROUNDOFF;
        Self { dim: n + 1, degree, max_exp, terms, filter_factor }
    }

    /// Sign of `p(numerators / denominator)`; `denominator > 0`.
    pub(crate) fn sign(&self, numerators: &[i64], denominator: i64) -> i8 {
        debug_assert_eq!(numerators.len(), self.dim);
        let mut coords = [0.0; MAX_DIM];
        for (c, &a) in coords.iter_mut().zip(numerators) {
            *c = a as f64 / denominator as f64;
        }
        let (value, magnitude) = self.approximate(&coords[..self.dim]);
        let bound = self.filter_factor * magnitude + self.terms.len() as f64 * 4.0 * f64::MIN_POSITIVE;
        if value > bound {
            1
        } else if value < -bound {
            -1
        } else {
            self.exact_sign(numerators, denominator)
        }
    }

    fn approximate(&self, coords: &[f64]) -> (f64, f64) {
        let mut powers = [[0.0; MAX_EXP + 1]; MAX_DIM];
        for (axis, &v) in coords.iter().enumerate() {
            let table = &mut powers[axis];
            table[0] = 1.0;
            for k in 1..=self.max_exp[axis] as usize {
                table[k] = table[k - 1] * v;
            }
        }
        let mut value = 0.0;
        let mut magnitude = 0.0;
        for t in &self.terms {
            let mut m = t.approx;
            for (axis, &e) in t.exps.iter().enumerate() {
                m *= powers[axis][e as usize];
            }
            value += m;
            magnitude += m.abs();
        }
        (value, magnitude)
    }

    fn exact_sign(&self, numerators: &[i64], denominator: i64) -> i8 {
        let den = BigInt::from(denominator);
        let nums: Vec<BigInt> = numerators.iter().map(|&a| BigInt::from(a)).collect();
        let mut acc = BigInt::zero();
        for t in &self.terms {
            let mut m = t.integral.clone();
            let mut deg = 0;
            for (axis, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    m *= num_traits::pow(nums[axis].clone(), e as usize);
                    deg += e;
                }
            }
            m *= num_traits::pow(den.clone(), (self.degree - deg) as usize);
            acc += m;
        }
        match acc.sign() {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::NoSign => 0,
        }
    }

    #[cfg(test)]
    pub(crate) fn exact_only(&self, numerators: &[i64], denominator: i64) -> i8 {
        self.exact_sign(numerators, denominator)
    }
}

/// Smallest rational `k/4 >= r`, as `(numerator, 4)`, for box widths.
pub(crate) fn quarter_ceiling(r: f64) -> (i64, i64) {
    let q = (r * 4.0).ceil().max(1.0) as i64;
    (q, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;
    use proptest::prelude::*;

    #[test]
    fn exact_zero_on_nodal_set() {
        let p = parse_poly("2*t + x^2", 1).unwrap();
        let s = ExactSigner::new(&p);
        // (x, t) = (1, -1/2) with denominator 2
        assert_eq!(s.sign(&[2, -1], 2), 0);
        assert_eq!(s.sign(&[2, 1], 2), 1);
        assert_eq!(s.sign(&[0, -1], 2), -1);
    }

    #[test]
    fn nearly_cancelling_values() {
        // x^2 - y^2 at x = y but perturbed by one unit at a large denominator
        let p = parse_poly("x^2 - y^2", 2).unwrap();
        let s = ExactSigner::new(&p);
        let d = 1_000_000_007;
        assert_eq!(s.sign(&[d - 1, d - 2, 0], d), 1);
        assert_eq!(s.sign(&[d - 2, d - 1, 0], d), -1);
        assert_eq!(s.sign(&[d - 2, d - 2, 0], d), 0);
    }

    proptest! {
        #[test]
        fn filtered_sign_matches_exact(
            a in -64i64..64, b in -64i64..64, c in -64i64..64, den in 1i64..64,
        ) {
            let p = parse_poly(
                "7500*t^2 + 150*t*(37*x^2-7*x*y+13*y^2) + 192*x^4+176*x^3*y+1623*x^2*y^2-351*x*y^3-108*y^4",
                2,
            ).unwrap();
            let s = ExactSigner::new(&p);
            prop_assert_eq!(s.sign(&[a, b, c], den), s.exact_only(&[a, b, c], den));
        }
    }
}
