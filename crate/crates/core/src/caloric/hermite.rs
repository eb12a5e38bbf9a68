use num_bigint::BigInt;

use super::{basic::factorial, basic_hcp, CaloricError};
use crate::polyring::{ExponentVector, Polynomial};
use crate::{RatPoly, Rational};

/// Physicists' Hermite polynomial `H_d` in one variable (no `t` terms),
/// from the explicit alternating sum.
pub fn hermite(d: u32) -> RatPoly {
    let df = factorial(d);
    let terms = (0..=d / 2).map(|j| {
        let power = d - 2 * j;
        let mut c = &df / (factorial(j) * factorial(power)) * (BigInt::from(1) << power);
        if j % 2 == 1 {
            c = -c;
        }
        (ExponentVector::new(0, vec![power]), Rational::from_integer(c))
    });
    Polynomial::from_terms(1, terms).expect("dimension 1")
}

/// Checks `p_d(x, -1) == (floor(d/2)! / d!) H_d(x/2)` coefficientwise.
pub fn hermite_relation_check(d: u32) -> Result<(), CaloricError> {
    let left = basic_hcp(d).at_time(&Rational::from_integer((-1).into()));
    let half = Rational::new(1.into(), 2.into());
    let scale = Rational::new(factorial(d / 2), factorial(d));
    let right = hermite(d)
        .compose(&[Polynomial::x(1, 0).scale(&half)], &Polynomial::t(1))?
        .scale(&scale);
    for power in (0..=d).rev() {
        let e = ExponentVector::new(0, vec![power]);
        let (l, r) = (left.coeff(&e), right.coeff(&e));
        if l != r {
            return Err(CaloricError::HermiteMismatch {
                degree: d,
                power,
                left: l.to_string(),
                right: r.to_string(),
            });
        }
    }
    Ok(())
}
