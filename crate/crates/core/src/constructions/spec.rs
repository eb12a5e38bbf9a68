use num_traits::One;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use super::families::{high_dim_in, lewy_2mod4, odd_construction, product_lower, rational_rotation, zero_mod4};
use super::fixtures::fixture;
use super::harmonic::HarmonicKind;
use super::scan::{default_eps_grid, scan_epsilon};
use super::ConstructionError;
use crate::nodal::degree_schedule;
use crate::scalar::{format_rational, parse_rational, rat};
use crate::{RatPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Lewy,
    Odd,
    #[serde(rename = "zero_mod_4", alias = "zero_mod4", alias = "zero-mod4")]
    ZeroMod4,
    #[serde(alias = "high-dim")]
    HighDim,
    Product,
    Fixture,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Lewy => "lewy",
            Family::Odd => "odd",
            Family::ZeroMod4 => "zero_mod_4",
            Family::HighDim => "high_dim",
            Family::Product => "product",
            Family::Fixture => "fixture",
        }
    }

    /// Nodal count the construction is designed to reach for small `eps`.
    pub fn target_count(self) -> Option<usize> {
        match self {
            Family::Lewy | Family::Odd | Family::HighDim => Some(2),
            Family::ZeroMod4 => Some(3),
            Family::Product | Family::Fixture => None,
        }
    }

    pub fn uses_epsilon(self) -> bool {
        matches!(self, Family::Lewy | Family::Odd | Family::ZeroMod4)
    }

    pub fn uses_rotation(self) -> bool {
        matches!(self, Family::Odd | Family::ZeroMod4)
    }
}

impl std::str::FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| ConstructionError::Precondition(format!("unknown family `{s}`")))
    }
}

/// Rotation `(c, s)` of the perturbation term.
#[derive(Debug, Clone, PartialEq)]
pub enum Rotation {
    /// Rational point on the unit circle.
    Exact(Rational, Rational),
    /// Angle in radians, realized through [`rational_rotation`].
    Angle(f64),
}

impl Default for Rotation {
    fn default() -> Self {
        Rotation::Exact(rat(3, 5), rat(4, 5))
    }
}

impl Rotation {
    /// `"p/q,p/q"` or `"angle:<float>"`.
    pub fn parse(text: &str) -> Option<Self> {
        if let Some(a) = text.strip_prefix("angle:") {
            let a: f64 = a.trim().parse().ok()?;
            return a.is_finite().then_some(Rotation::Angle(a));
        }
        let (c, s) = text.split_once(',')?;
        Some(Rotation::Exact(parse_rational(c.trim())?, parse_rational(s.trim())?))
    }

    pub fn pair(&self) -> (Rational, Rational) {
        match self {
            Rotation::Exact(c, s) => (c.clone(), s.clone()),
            Rotation::Angle(a) => rational_rotation(*a),
        }
    }

    pub fn path(&self) -> &'static str {
        match self {
            Rotation::Exact(..) => "exact",
            Rotation::Angle(_) => "angle",
        }
    }
}

impl Serialize for Rotation {
    fn serialize<Se: Serializer>(&self, ser: Se) -> Result<Se::Ok, Se::Error> {
        match self {
            Rotation::Exact(c, s) => {
                let mut t = ser.serialize_tuple(2)?;
                t.serialize_element(&format_rational(c))?;
                t.serialize_element(&format_rational(s))?;
                t.end()
            }
            Rotation::Angle(a) => ser.serialize_f64(*a),
        }
    }
}

impl<'de> Deserialize<'de> for Rotation {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair(String, String),
            Angle(f64),
        }
        match Raw::deserialize(de)? {
            Raw::Pair(c, s) => match (parse_rational(&c), parse_rational(&s)) {
                (Some(c), Some(s)) => Ok(Rotation::Exact(c, s)),
                _ => Err(de::Error::custom("rotation entries must be rationals")),
            },
            Raw::Angle(a) => Ok(Rotation::Angle(a)),
        }
    }
}

mod eps_text {
    use super::*;

    pub fn serialize<Se: Serializer>(eps: &Option<Rational>, ser: Se) -> Result<Se::Ok, Se::Error> {
        match eps {
            Some(e) => ser.serialize_str(&format_rational(e)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        let raw: Option<Raw> = Option::deserialize(de)?;
        // numbers go through their shortest decimal form, so 0.3 reads as 3/10
        let text = match raw {
            None => return Ok(None),
            Some(Raw::Text(s)) => s,
            Some(Raw::Number(x)) => format!("{x}"),
        };
        parse_rational(&text).map(Some).ok_or_else(|| de::Error::custom(format!("bad epsilon `{text}`")))
    }
}

/// A construction request, serialized as
/// `{"family", "d", "n", "eps", "rot", "fixture"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    #[serde(default)]
    pub d: u32,
    #[serde(default = "two")]
    pub n: usize,
    #[serde(default, with = "eps_text", skip_serializing_if = "Option::is_none")]
    pub eps: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rot: Option<Rotation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<HarmonicKind>,
}

fn two() -> usize {
    2
}

/// Output of [`ConstructionSpec::build`].
#[derive(Debug, Clone, PartialEq)]
pub struct Built {
    pub poly: RatPoly,
    /// Epsilon actually used, after defaults.
    pub eps: Option<Rational>,
    /// `"exact"` or `"angle"`, for rotated families.
    pub rotation_path: Option<&'static str>,
}

/// Figure-style default epsilon: `1/5`, `3/10`, `1/20` for the degree-4,
/// degree-5 and degree-6 members of their families.
pub fn default_epsilon(family: Family, d: u32) -> Option<Rational> {
    match (family, d) {
        (Family::ZeroMod4, 4) => Some(rat(1, 5)),
        (Family::Odd, 5) => Some(rat(3, 10)),
        (Family::Lewy, 6) => Some(rat(1, 20)),
        _ => None,
    }
}

impl ConstructionSpec {
    pub fn new(family: Family, d: u32) -> Self {
        let n = match family {
            Family::HighDim => 3,
            _ => 2,
        };
        Self { family, d, n, eps: None, rot: None, fixture: None, kind: None }
    }

    pub fn fixture(id: &str) -> Self {
        Self { fixture: Some(id.to_string()), ..Self::new(Family::Fixture, 0) }
    }

    pub fn with_eps(mut self, eps: Rational) -> Self {
        self.eps = Some(eps);
        self
    }

    pub fn with_rot(mut self, rot: Rotation) -> Self {
        self.rot = Some(rot);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Builds with an explicit epsilon, ignoring `self.eps`.
    pub fn build_with_eps(&self, eps: &Rational) -> Result<RatPoly, ConstructionError> {
        let (c, s) = self.rot.clone().unwrap_or_default().pair();
        let p = match self.family {
            Family::Lewy => lewy_2mod4(self.d, eps)?,
            Family::Odd => odd_construction(self.d, eps, &c, &s)?,
            Family::ZeroMod4 => zero_mod4(self.d, eps, &c, &s)?,
            Family::HighDim => high_dim_in(self.n, self.d, self.kind.unwrap_or(HarmonicKind::Re))?,
            Family::Product => product_lower(self.n, self.d)?,
            Family::Fixture => {
                let id = self.fixture.as_deref().ok_or_else(|| {
                    ConstructionError::Precondition("fixture family needs a fixture id".into())
                })?;
                fixture(id)?
            }
        };
        Ok(p)
    }

    /// Builds the polynomial. Without an epsilon the family default is
    /// used, or failing that the largest admissible value of a default scan.
    pub fn build(&self) -> Result<Built, ConstructionError> {
        if !self.family.uses_epsilon() {
            return Ok(Built { poly: self.build_with_eps(&Rational::one())?, eps: None, rotation_path: None });
        }
        let eps = match self.eps.clone().or_else(|| default_epsilon(self.family, self.d)) {
            Some(e) => e,
            None => {
                let target = self.family.target_count().expect("perturbative family");
                let grid = default_eps_grid(self.family, self.d);
                let report = scan_epsilon(self, &grid, target, &degree_schedule(self.n, self.d))?;
                report.largest_admissible.ok_or(ConstructionError::NoAdmissibleEpsilon)?
            }
        };
        let poly = self.build_with_eps(&eps)?;
        let rotation_path = self.family.uses_rotation().then(|| self.rot.clone().unwrap_or_default().path());
        Ok(Built { poly, eps: Some(eps), rotation_path })
    }
}
