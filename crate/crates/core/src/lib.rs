//! Homogeneous caloric polynomials: exact construction, algebraic
//! verification, and nodal-domain counting.

pub mod caloric;
pub mod constructions;
pub mod nodal;
pub mod polyring;
pub mod scalar;

pub use polyring::{parse_poly, ExponentVector, Point, PolyError, Polynomial, Var};
pub use scalar::Scalar;

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;
/// Exact polynomial, the carrier for every algebraic check.
pub type RatPoly = Polynomial<Rational>;
/// Double-precision polynomial (float-angle constructions).
pub type F64Poly = Polynomial<f64>;
/// Single-precision polynomial.
pub type F32Poly = Polynomial<f32>;
pub type RationalPoint = Point<Rational>;
