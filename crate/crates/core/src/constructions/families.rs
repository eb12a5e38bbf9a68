use num_traits::{One, Zero};

use super::harmonic::{harmonic_2d, HarmonicSeed};
use super::ConstructionError;
use crate::caloric::basic_hcp;
use crate::polyring::Polynomial;
use crate::Scalar;

/// `p_d(x_axis, t)` inside a ring of `n` space variables.
fn basic_on<S: Scalar>(d: u32, n: usize, axis: usize) -> Polynomial<S> {
    basic_hcp(d).convert::<S>().embed(n, &[axis]).expect("axis within range")
}

fn positive<S: Scalar>(eps: &S) -> Result<(), ConstructionError> {
    if eps.is_negative() || eps.is_zero() {
        return Err(ConstructionError::Precondition("epsilon must be positive".into()));
    }
    Ok(())
}

fn congruence(family: &'static str, d: u32, ok: bool, rule: &'static str) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::Congruence { family, d, rule })
    }
}

/// `Im((x + iy)^d) - eps p_d(x, t)`, `d = 2 mod 4`.
pub fn lewy_2mod4<S: Scalar>(d: u32, eps: &S) -> Result<Polynomial<S>, ConstructionError> {
    congruence("lewy", d, d % 4 == 2, "d = 2 mod 4")?;
    positive(eps)?;
    let psi: Polynomial<S> = harmonic_2d(HarmonicSeed::im(d));
    Ok(&psi - &basic_on::<S>(d, 2, 0).scale(eps))
}

/// `y p_{d-1}(x, t) - eps p_d(c x - s y, t)`, `d` odd.
pub fn odd_construction<S: Scalar>(d: u32, eps: &S, c: &S, s: &S) -> Result<Polynomial<S>, ConstructionError> {
    congruence("odd", d, d % 2 == 1 && d >= 3, "d odd and at least 3")?;
    positive(eps)?;
    let lead = &Polynomial::x(2, 1) * &basic_on::<S>(d - 1, 2, 0);
    let tilted = basic_on::<S>(d, 2, 0).rotate_xy(0, 1, c, s)?;
    Ok(&lead - &tilted.scale(eps))
}

/// `p_{2k}(x, t) p_{2k}(y, t) + eps p_{2k+1}(c x - s y, t) p_{2k-1}(s x + c y, t)`,
/// `d = 4k`.
pub fn zero_mod4<S: Scalar>(d: u32, eps: &S, c: &S, s: &S) -> Result<Polynomial<S>, ConstructionError> {
    congruence("zero_mod_4", d, d.is_multiple_of(4) && d >= 4, "d = 0 mod 4 and at least 4")?;
    positive(eps)?;
    let k2 = d / 2;
    let lead = &basic_on::<S>(k2, 2, 0) * &basic_on::<S>(k2, 2, 1);
    let pair = &basic_on::<S>(k2 + 1, 2, 0) * &basic_on::<S>(k2 - 1, 2, 1);
    let tilted = pair.rotate_xy(0, 1, c, s)?;
    Ok(&lead + &tilted.scale(eps))
}

/// `phi(x, y) + p_d(z, t)` with `phi` the harmonic seed of degree `d`.
pub fn high_dim<S: Scalar>(d: u32, kind: super::HarmonicKind) -> Result<Polynomial<S>, ConstructionError> {
    high_dim_in(3, d, kind)
}

/// [`high_dim`] embedded in `n >= 3` space variables; the remaining
/// variables do not occur.
pub fn high_dim_in<S: Scalar>(n: usize, d: u32, kind: super::HarmonicKind) -> Result<Polynomial<S>, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::Precondition(format!("high_dim needs n >= 3, got {n}")));
    }
    if d == 0 {
        return Err(ConstructionError::Precondition("high_dim needs d >= 1".into()));
    }
    let phi = harmonic_2d::<S>(HarmonicSeed { d, kind }).embed(n, &[0, 1])?;
    Ok(&phi + &basic_on::<S>(d, n, 2))
}

/// `p_b(x_n, t) prod_{i<n} p_c(x_i, t)` with `c = floor(d/n)`,
/// `b = d - (n-1) c`.
pub fn product_lower<S: Scalar>(n: usize, d: u32) -> Result<Polynomial<S>, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::Precondition(format!("product_lower needs n >= 2, got {n}")));
    }
    let c = d / n as u32;
    if c < 2 {
        return Err(ConstructionError::Precondition(format!("floor(d/n) = {c} must be at least 2")));
    }
    let b = d - (n as u32 - 1) * c;
    let mut out = basic_on::<S>(b, n, n - 1);
    for i in 0..n - 1 {
        out = &out * &basic_on::<S>(c, n, i);
    }
    Ok(out)
}

/// Exact unit vector `((1 - u^2) / (1 + u^2), 2u / (1 + u^2))` with `u` the
/// double nearest `tan(alpha / 2)`.
pub fn rational_rotation(alpha: f64) -> (crate::Rational, crate::Rational) {
    use crate::Rational;
    let u = Rational::from_float((alpha / 2.0).tan()).unwrap_or_else(Rational::zero);
    let one = Rational::one();
    let den = &one + &u * &u;
    ((&one - &u * &u) / &den, (&u + &u) / den)
}
