use std::path::PathBuf;

use calorics::constructions::{ConstructionSpec, Family, HarmonicKind, Rotation};
use calorics::scalar::parse_rational;
use calorics::{parse_poly, RatPoly};
use clap::Args;
use serde_json::{json, Value};

use crate::Failure;

/// Construction parameters shared by `gen` and `--gen`.
#[derive(Args, Debug, Clone, Default)]
pub struct BuildArgs {
    /// Degree.
    #[arg(short = 'd', long = "degree")]
    pub degree: Option<u32>,
    /// Number of space variables.
    #[arg(short = 'n', long = "dim")]
    pub dim: Option<usize>,
    /// Perturbation size, `p/q` or a decimal (read exactly).
    #[arg(long)]
    pub eps: Option<String>,
    /// Rotation, `c,s` as rationals or `angle:<radians>`.
    #[arg(long)]
    pub rot: Option<String>,
    /// Harmonic seed of `high-dim`: `re` or `im`.
    #[arg(long)]
    pub kind: Option<String>,
}

/// Exactly one polynomial source.
#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Polynomial file: JSON as written by `gen`, or an expression.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline expression in `x, y, z` (or `x1..xn`) and `t`; needs `-n`
    /// unless it is one-dimensional.
    #[arg(long)]
    pub expr: Option<String>,
    /// Named fixture.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Construction family, built from the shared parameters.
    #[arg(long = "gen")]
    pub family: Option<String>,
    #[command(flatten)]
    pub build: BuildArgs,
}

/// A loaded polynomial with a description of where it came from.
pub struct Loaded {
    pub poly: RatPoly,
    pub origin: Value,
}

fn config(msg: impl Into<String>) -> Failure {
    Failure::Config(msg.into())
}

impl BuildArgs {
    /// Builds `family`, where `basic` means `p_d(x, t)`.
    pub fn construct(&self, family: &str, fixture_id: Option<&str>) -> Result<Loaded, Failure> {
        if family == "basic" {
            let d = self.degree.ok_or_else(|| config("basic needs -d"))?;
            if self.dim.is_some_and(|n| n != 1) {
                return Err(config("basic is p_d(x, t); -n must be 1"));
            }
            let poly = calorics::caloric::basic_hcp(d);
            return Ok(Loaded { poly, origin: json!({"family": "basic", "d": d, "n": 1}) });
        }
        let family: Family = family.parse().map_err(|e: calorics::constructions::ConstructionError| config(e.to_string()))?;
        let mut spec = match family {
            Family::Fixture => {
                let id = fixture_id.ok_or_else(|| config("fixture needs an id"))?;
                ConstructionSpec::fixture(id)
            }
            _ => ConstructionSpec::new(family, self.degree.ok_or_else(|| config(format!("{} needs -d", family.name())))?),
        };
        if let Some(n) = self.dim {
            spec.n = n;
        }
        if let Some(e) = &self.eps {
            spec.eps = Some(parse_rational(e).ok_or_else(|| config(format!("bad --eps `{e}`")))?);
        }
        if let Some(r) = &self.rot {
            spec.rot = Some(Rotation::parse(r).ok_or_else(|| config(format!("bad --rot `{r}`")))?);
        }
        if let Some(k) = &self.kind {
            spec.kind = Some(match k.as_str() {
                "re" => HarmonicKind::Re,
                "im" => HarmonicKind::Im,
                _ => return Err(config(format!("bad --kind `{k}`, expected re or im"))),
            });
        }
        let built = spec.build().map_err(|e| config(e.to_string()))?;
        let mut origin = serde_json::to_value(&spec).expect("spec serializes");
        if family == Family::Fixture {
            origin["n"] = json!(built.poly.spatial_dim());
            origin["d"] = json!(built.poly.parabolic_degree().ok());
        }
        if let Some(eps) = &built.eps {
            origin["eps"] = json!(calorics::scalar::format_rational(eps));
        }
        if let Some(path) = built.rotation_path {
            origin["rotation_path"] = json!(path);
        }
        Ok(Loaded { poly: built.poly, origin })
    }
}

impl SourceArgs {
    pub fn load(&self) -> Result<Loaded, Failure> {
        let given = [self.file.is_some(), self.expr.is_some(), self.fixture.is_some(), self.family.is_some()];
        match given.iter().filter(|&&g| g).count() {
            1 => {}
            0 => return Err(config("give one of --file, --expr, --fixture, --gen")),
            _ => return Err(config("give only one of --file, --expr, --fixture, --gen")),
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| config(format!("{}: {e}", path.display())))?;
            let poly = if text.trim_start().starts_with('{') {
                RatPoly::from_json(&text).map_err(|e| config(format!("{}: {e}", path.display())))?
            } else {
                parse_poly(text.trim(), self.build.dim.unwrap_or(1))
                    .map_err(|e| config(format!("{}: {e}", path.display())))?
            };
            return Ok(Loaded { poly, origin: json!({"file": path.display().to_string()}) });
        }
        if let Some(text) = &self.expr {
            let poly = parse_poly(text, self.build.dim.unwrap_or(1)).map_err(|e| config(e.to_string()))?;
            return Ok(Loaded { poly, origin: json!({"expr": text}) });
        }
        if let Some(id) = &self.fixture {
            let poly = calorics::constructions::fixture(id).map_err(|e| config(e.to_string()))?;
            return Ok(Loaded { poly, origin: json!({"fixture": id}) });
        }
        let family = self.family.as_deref().expect("one source");
        self.build.construct(family, None)
    }
}
