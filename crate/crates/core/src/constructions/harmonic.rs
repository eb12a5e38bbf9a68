use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::polyring::{binomial, ExponentVector, Polynomial};
use crate::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HarmonicKind {
    Re,
    Im,
}

/// `Re` or `Im` of `(x + iy)^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicSeed {
    pub d: u32,
    pub kind: HarmonicKind,
}

impl HarmonicSeed {
    pub fn re(d: u32) -> Self {
        Self { d, kind: HarmonicKind::Re }
    }

    pub fn im(d: u32) -> Self {
        Self { d, kind: HarmonicKind::Im }
    }
}

/// Harmonic polynomial in `(x, y)` with integer coefficients, `t`-free.
pub fn harmonic_2d<S: Scalar>(seed: HarmonicSeed) -> Polynomial<S> {
    let d = seed.d;
    let parity = match seed.kind {
        HarmonicKind::Re => 0,
        HarmonicKind::Im => 1,
    };
    // (iy)^k contributes i^k: real for even k, imaginary for odd k
    let terms = (parity..=d).step_by(2).map(|k| {
        let mut c = BigInt::from(binomial(u64::from(d), u64::from(k)));
        if (k / 2) % 2 == 1 {
            c = -c;
        }
        (ExponentVector::new(0, vec![d - k, k]), S::from_rational(&Rational::from_integer(c)))
    });
    Polynomial::from_terms(2, terms).expect("dimension 2")
}
