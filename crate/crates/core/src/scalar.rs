//! Coefficient field abstraction.
//!
//! Polynomials are generic over [`Scalar`]. The exact layer uses
//! [`Rational`](crate::Rational); `f64`/`f32` carry the float-path
//! constructions (arbitrary rotation angles) and are converted exactly to
//! rationals before any sign is taken.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient type of a [`Polynomial`](crate::Polynomial).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `true` when arithmetic in this type is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    /// Exact rational value of `self`, if it is finite.
    fn to_rational(&self) -> Option<BigRational>;

    fn to_f64(&self) -> f64;

    fn abs_value(&self) -> Self;

    fn is_zero_coeff(&self) -> bool;

    fn is_negative(&self) -> bool;

    /// Text of `|self|` as used by the expression printer.
    fn magnitude_text(&self) -> String;

    /// `c^2 + s^2 == 1` (exactly, or within rounding for floats).
    fn is_unit_pair(c: &Self, s: &Self) -> bool;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn magnitude_text(&self) -> String {
        format_rational(&self.abs())
    }

    fn is_unit_pair(c: &Self, s: &Self) -> bool {
        (c * c + s * s).is_one()
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $f
            }

            fn from_rational(r: &BigRational) -> Self {
                ToPrimitive::to_f64(r).unwrap_or(f64::NAN) as $f
            }

            fn to_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn abs_value(&self) -> Self {
                self.abs()
            }

            fn is_zero_coeff(&self) -> bool {
                *self == 0.0
            }

            fn is_negative(&self) -> bool {
                *self < 0.0
            }

            fn magnitude_text(&self) -> String {
                format!("{:?}", self.abs())
            }

            fn is_unit_pair(c: &Self, s: &Self) -> bool {
                (c * c + s * s - 1.0).abs() <= 8.0 * <$f>::EPSILON
            }
        }
    };
}

impl_float_scalar!(f64);
impl_float_scalar!(f32);

/// Parses `"p/q"`, an integer, or a finite decimal literal such as `"0.05"`
/// into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac.is_empty())
        {
            return None;
        }
        let digits = format!("{int_digits}{frac}");
        let mantissa: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let r = BigRational::new(mantissa, scale);
        return Some(if negative { -r } else { r });
    }
    let v: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(v))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
