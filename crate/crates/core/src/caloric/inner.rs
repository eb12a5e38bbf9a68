use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::polyring::PolyError;
use crate::scalar::format_rational;
use crate::{RatPoly, Rational};

/// `rational_part * pi^(pi_half_power / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInnerProduct {
    pub rational_part: Rational,
    pub pi_half_power: u32,
}

impl WeightedInnerProduct {
    pub fn to_f64(&self) -> f64 {
        let r = crate::Scalar::to_f64(&self.rational_part);
        r * std::f64::consts::PI.powf(self.pi_half_power as f64 / 2.0)
    }
}

impl Serialize for WeightedInnerProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("WeightedInnerProduct", 2)?;
        s.serialize_field("rational", &format_rational(&self.rational_part))?;
        s.serialize_field("pi_half_power", &self.pi_half_power)?;
        s.end()
    }
}

/// `int x^j e^{-x^2/4} dx / sqrt(pi)`: zero for odd `j`, and
/// `2^{m+1} (2m-1)!!` for `j = 2m`.
pub fn gaussian_moment(j: u32) -> Rational {
    if j % 2 == 1 {
        return Rational::zero();
    }
    let m = j / 2;
    let double_fact = (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1));
    Rational::from_integer(double_fact * (BigInt::one() << (m + 1)))
}

/// `int_{R^n} p(x,-1) q(x,-1) e^{-|x|^2/4} dx`, exactly, from the closed-form
/// Gaussian moments.
pub fn weighted_inner_product(p: &RatPoly, q: &RatPoly) -> Result<WeightedInnerProduct, PolyError> {
    let minus_one = -Rational::one();
    let integrand = p.at_time(&minus_one).checked_mul(&q.at_time(&minus_one))?;
    let mut total = Rational::zero();
    for (e, c) in integrand.terms() {
        if e.space_exps.iter().any(|a| a % 2 == 1) {
            continue;
        }
        total += e.space_exps.iter().fold(c.clone(), |acc, &a| acc * gaussian_moment(a));
    }
    Ok(WeightedInnerProduct { rational_part: total, pi_half_power: p.spatial_dim() as u32 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caloric::{basic_hcp, product_hcp};

    #[test]
    fn one_dimensional_examples() {
        let w = weighted_inner_product(&basic_hcp(1), &basic_hcp(1)).unwrap();
        assert_eq!(w.rational_part, Rational::from_integer(4.into()));
        assert_eq!(w.pi_half_power, 1);
        let w = weighted_inner_product(&basic_hcp(1), &basic_hcp(2)).unwrap();
        assert!(w.rational_part.is_zero());
    }

    #[test]
    fn distinct_product_indices_are_orthogonal() {
        let a = product_hcp(&vec![2, 0].into());
        let b = product_hcp(&vec![0, 2].into());
        assert!(weighted_inner_product(&a, &b).unwrap().rational_part.is_zero());
    }

    #[test]
    fn json_form() {
        let w = WeightedInnerProduct { rational_part: Rational::new(3.into(), 2.into()), pi_half_power: 2 };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"rational":"3/2","pi_half_power":2}"#);
    }

    #[test]
    fn dimension_mismatch() {
        let a = product_hcp(&vec![1, 1].into());
        assert!(weighted_inner_product(&a, &basic_hcp(2)).is_err());
    }
}
