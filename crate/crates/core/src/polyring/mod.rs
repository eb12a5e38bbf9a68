//! Sparse multivariate polynomials in `(x1, ..., xn, t)`.
//!
//! A [`Polynomial`] stores a map from [`ExponentVector`] to a nonzero
//! coefficient. Coefficients are generic over [`Scalar`]; the exact layer
//! uses [`Rational`](crate::Rational).

mod eval;
mod format;
mod json;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use eval::{FloatEvaluator, Point};
pub use json::{PolyJson, TermJson};
pub use parse::{parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid variable index {index} for spatial dimension {n}")]
    InvalidVariable { index: usize, n: usize },
    #[error("polynomial is not parabolically homogeneous (weights {first} and {second})")]
    NotHomogeneous { first: u32, second: u32 },
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("rotation pair is not on the unit circle")]
    NotOnUnitCircle,
    #[error("invalid rotation axes ({i}, {j}) for spatial dimension {n}")]
    InvalidAxes { i: usize, j: usize, n: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Exponents of the monomial `t^k x^alpha`.
///
/// Ordered lexicographically on `(k, alpha)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    pub t_exp: u32,
    pub space_exps: Vec<u32>,
}

impl ExponentVector {
    pub fn new(t_exp: u32, space_exps: Vec<u32>) -> Self {
        Self { t_exp, space_exps }
    }

    pub fn constant(n: usize) -> Self {
        Self::new(0, vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.space_exps.len()
    }

    /// `|alpha|`
    pub fn spatial_degree(&self) -> u32 {
        self.space_exps.iter().sum()
    }

    /// `2k + |alpha|`
    pub fn parabolic_weight(&self) -> u32 {
        2 * self.t_exp + self.spatial_degree()
    }

    /// Ordinary total degree `k + |alpha|`.
    pub fn total_degree(&self) -> u32 {
        self.t_exp + self.spatial_degree()
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            t_exp: self.t_exp + other.t_exp,
            space_exps: self.space_exps.iter().zip(&other.space_exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Variable of the ring: a spatial coordinate (0-based) or time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X(usize),
    T,
}

#[derive(Clone, PartialEq)]
pub struct Polynomial<S> {
    n: usize,
    terms: BTreeMap<ExponentVector, S>,
}

impl<S: Scalar> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(n={}, {})", self.n, self)
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: S) -> Self {
        Self::monomial(ExponentVector::constant(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, S::one())
    }

    pub fn monomial(exps: ExponentVector, c: S) -> Self {
        let mut p = Self::zero(exps.dim());
        if !c.is_zero_coeff() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The coordinate `x_i` (0-based).
    pub fn x(n: usize, i: usize) -> Self {
        assert!(i < n, "x index {i} out of range for n = {n}");
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(ExponentVector::new(0, e), S::one())
    }

    pub fn t(n: usize) -> Self {
        Self::monomial(ExponentVector::new(1, vec![0; n]), S::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVector, S)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.dim() != n {
                return Err(PolyError::DimensionMismatch { left: n, right: e.dim() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: S) {
        if c.is_zero_coeff() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero_coeff() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn spatial_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    /// Terms sorted for printing: descending parabolic weight, then
    /// descending lexicographic `(k, alpha)`.
    pub fn canonical_terms(&self) -> Vec<(&ExponentVector, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            b.0.parabolic_weight().cmp(&a.0.parabolic_weight()).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    fn check_dim(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            Err(PolyError::DimensionMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero_coeff() {
            return out;
        }
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.n);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Re-types the coefficients through their exact rational value.
    pub fn convert<T: Scalar>(&self) -> Polynomial<T> {
        self.map_coeffs(|c| T::from_rational(&c.to_rational().expect("finite coefficient")))
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: Var) -> Result<Self, PolyError> {
        if let Var::X(i) = var {
            if i >= self.n {
                return Err(PolyError::InvalidVariable { index: i, n: self.n });
            }
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let power = match var {
                Var::X(i) => e.space_exps[i],
                Var::T => e.t_exp,
            };
            if power == 0 {
                continue;
            }
            let mut de = e.clone();
            match var {
                Var::X(i) => de.space_exps[i] -= 1,
                Var::T => de.t_exp -= 1,
            }
            out.add_term(de, c.clone() * S::from_i64(power as i64));
        }
        Ok(out)
    }

    /// Spatial Laplacian `sum_i d^2/dx_i^2`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            for i in 0..self.n {
                let a = e.space_exps[i];
                if a < 2 {
                    continue;
                }
                let mut de = e.clone();
                de.space_exps[i] -= 2;
                out.add_term(de, c.clone() * S::from_i64((a * (a - 1)) as i64));
            }
        }
        out
    }

    /// `x . grad p` in the spatial variables (the Euler operator).
    pub fn radial_derivative(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e.spatial_degree();
            if a > 0 {
                out.add_term(e.clone(), c.clone() * S::from_i64(a as i64));
            }
        }
        out
    }

    /// The heat operator `d/dt - Laplacian`.
    pub fn heat_apply(&self) -> Self {
        let dt = self.partial(Var::T).expect("t is always valid");
        &dt - &self.laplacian()
    }

    /// The common parabolic weight `2k + |alpha|` of all terms.
    pub fn parabolic_degree(&self) -> Result<u32, PolyError> {
        let mut weights = self.terms.keys().map(ExponentVector::parabolic_weight);
        let first = weights.next().ok_or(PolyError::ZeroPolynomial)?;
        match weights.find(|&w| w != first) {
            Some(second) => Err(PolyError::NotHomogeneous { first, second }),
            None => Ok(first),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExponentVector::total_degree).max().unwrap_or(0)
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.t_exp).max()
    }

    /// `[p_m, ..., p_0]` with `p = sum_j t^j p_j(x)`. Intermediate
    /// coefficients may be zero; `p_m` never is.
    pub fn t_coefficients(&self) -> Vec<Self> {
        let Some(m) = self.t_degree() else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(self.n); m as usize + 1];
        for (e, c) in &self.terms {
            let slot = (m - e.t_exp) as usize;
            out[slot].add_term(ExponentVector::new(0, e.space_exps.clone()), c.clone());
        }
        out
    }

    /// Reassembles `sum_j t^j p_j` from the output of [`t_coefficients`](Self::t_coefficients).
    pub fn from_t_coefficients(n: usize, coeffs: &[Self]) -> Self {
        let m = coeffs.len().saturating_sub(1);
        let mut out = Self::zero(n);
        for (slot, pj) in coeffs.iter().enumerate() {
            let j = (m - slot) as u32;
            for (e, c) in &pj.terms {
                out.add_term(ExponentVector::new(e.t_exp + j, e.space_exps.clone()), c.clone());
            }
        }
        out
    }

    /// Substitutes `x_i -> images[i]` and `t -> t_image`. All images must
    /// live in a common ring of dimension `target_n`.
    pub fn compose(&self, images: &[Self], t_image: &Self) -> Result<Self, PolyError> {
        if images.len() != self.n {
            return Err(PolyError::DimensionMismatch { left: self.n, right: images.len() });
        }
        let target_n = t_image.n;
        for img in images {
            t_image.check_dim(img)?;
        }
        let mut cache: Vec<Vec<Self>> = images.iter().map(|img| vec![Self::one(target_n), img.clone()]).collect();
        let mut t_cache = vec![Self::one(target_n), t_image.clone()];
        fn power<S: Scalar>(cache: &mut Vec<Polynomial<S>>, e: u32) -> Polynomial<S> {
            while cache.len() <= e as usize {
                let next = &cache[cache.len() - 1] * &cache[1];
                cache.push(next);
            }
            cache[e as usize].clone()
        }
        let mut out = Self::zero(target_n);
        for (e, c) in &self.terms {
            let mut term = power(&mut t_cache, e.t_exp).scale(c);
            for (i, &a) in e.space_exps.iter().enumerate() {
                if a > 0 {
                    term = &term * &power(&mut cache[i], a);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Places the variables of `self` into a ring of dimension `target_n`,
    /// sending `x_i` to `x_{axes[i]}`; `t` stays `t`.
    pub fn embed(&self, target_n: usize, axes: &[usize]) -> Result<Self, PolyError> {
        if axes.len() != self.n {
            return Err(PolyError::DimensionMismatch { left: self.n, right: axes.len() });
        }
        let mut out = Self::zero(target_n);
        for (e, c) in &self.terms {
            let mut exps = vec![0; target_n];
            for (i, &a) in e.space_exps.iter().enumerate() {
                let k = axes[i];
                if k >= target_n {
                    return Err(PolyError::InvalidVariable { index: k, n: target_n });
                }
                exps[k] += a;
            }
            out.add_term(ExponentVector::new(e.t_exp, exps), c.clone());
        }
        Ok(out)
    }

    /// Rotation in the `(x_i, x_j)` plane:
    /// `x_i -> c x_i - s x_j`, `x_j -> s x_i + c x_j`.
    pub fn rotate_xy(&self, i: usize, j: usize, c: &S, s: &S) -> Result<Self, PolyError> {
        if i == j || i >= self.n || j >= self.n {
            return Err(PolyError::InvalidAxes { i, j, n: self.n });
        }
        if !S::is_unit_pair(c, s) {
            return Err(PolyError::NotOnUnitCircle);
        }
        let n = self.n;
        let xi = Self::x(n, i);
        let xj = Self::x(n, j);
        let mut images: Vec<Self> = (0..n).map(|k| Self::x(n, k)).collect();
        images[i] = &xi.scale(c) - &xj.scale(s);
        images[j] = &xi.scale(s) + &xj.scale(c);
        self.compose(&images, &Self::t(n))
    }

    /// Substitutes a value for `t`, leaving a purely spatial polynomial.
    pub fn at_time(&self, t: &S) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for _ in 0..e.t_exp {
                v = v * t.clone();
            }
            out.add_term(ExponentVector::new(0, e.space_exps.clone()), v);
        }
        out
    }

    /// `p(-x, t)`
    pub fn reflect_space(&self) -> Self {
        self.map_terms(|e, c| if e.spatial_degree() % 2 == 1 { -c.clone() } else { c.clone() })
    }

    fn map_terms(&self, f: impl Fn(&ExponentVector, &S) -> S) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(e, c));
        }
        out
    }

    /// Largest coefficient magnitude, as `f64`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<S: Scalar> $trait for &Polynomial<S> {
            type Output = Polynomial<S>;

            /// Panics on dimension mismatch; use the `checked_*` form to
            /// handle it.
            fn $method(self, rhs: Self) -> Polynomial<S> {
                self.$checked(rhs).expect("polynomial dimensions agree")
            }
        }

        impl<S: Scalar> $trait for Polynomial<S> {
            type Output = Polynomial<S>;

            fn $method(self, rhs: Self) -> Polynomial<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        self.map_terms(|_, c| -c.clone())
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::to_expression(self))
    }
}

/// Binomial coefficient as `u128`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
