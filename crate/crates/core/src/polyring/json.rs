use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ExponentVector, PolyError, Polynomial};
use crate::Rational;

/// Canonical JSON form: `{"n": .., "terms": [{"k", "alpha", "num", "den"}]}`
/// with terms in printing order and coefficients in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub k: u32,
    pub alpha: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl Polynomial<Rational> {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            n: self.spatial_dim(),
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    k: e.t_exp,
                    alpha: e.space_exps.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json_value(value: &PolyJson) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(value.terms.len());
        for t in &value.terms {
            if t.alpha.len() != value.n {
                return Err(PolyError::Json(format!(
                    "alpha has length {} but n = {}",
                    t.alpha.len(),
                    value.n
                )));
            }
            let num: BigInt = t.num.parse().map_err(|_| PolyError::Json(format!("bad numerator `{}`", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| PolyError::Json(format!("bad denominator `{}`", t.den)))?;
            if den.is_zero() || den.is_negative() {
                return Err(PolyError::Json(format!("denominator must be positive, got {den}")));
            }
            terms.push((ExponentVector::new(t.k, t.alpha.clone()), Rational::new(num, den)));
        }
        Self::from_terms(value.n, terms)
    }

    pub fn from_json(text: &str) -> Result<Self, PolyError> {
        let value: PolyJson = serde_json::from_str(text).map_err(|e| PolyError::Json(e.to_string()))?;
        Self::from_json_value(&value)
    }
}
