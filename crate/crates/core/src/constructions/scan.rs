use serde::{Serialize, Serializer};

use super::spec::{default_epsilon, ConstructionSpec, Family};
use super::ConstructionError;
use crate::nodal::nodal_count;
use crate::scalar::{format_rational, rat};
use crate::Rational;

fn rational_text<Se: Serializer>(r: &Rational, ser: Se) -> Result<Se::Ok, Se::Error> {
    ser.serialize_str(&format_rational(r))
}

fn optional_text<Se: Serializer>(r: &Option<Rational>, ser: Se) -> Result<Se::Ok, Se::Error> {
    match r {
        Some(r) => rational_text(r, ser),
        None => ser.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    #[serde(serialize_with = "rational_text")]
    pub eps: Rational,
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
    pub stable: bool,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub family: Family,
    pub d: u32,
    pub target: usize,
    /// Rows in descending epsilon.
    pub rows: Vec<ScanRow>,
    #[serde(serialize_with = "optional_text")]
    pub largest_admissible: Option<Rational>,
    /// Set when no epsilon in the grid reached the target.
    pub flagged: bool,
}

impl ScanReport {
    /// `eps,total,pos,neg,stable,admissible` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("eps,total,pos,neg,stable,admissible\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                format_rational(&r.eps),
                r.total,
                r.positive,
                r.negative,
                r.stable,
                r.admissible
            ));
        }
        s
    }
}

/// `1/2, 1/4, ..., 1/64`, plus the family default for `d` when there is one.
pub fn default_eps_grid(family: Family, d: u32) -> Vec<Rational> {
    let mut grid: Vec<Rational> = (1..=6).map(|k| rat(1, 1 << k)).collect();
    if let Some(e) = default_epsilon(family, d) {
        if !grid.contains(&e) {
            grid.push(e);
        }
    }
    grid
}

/// Counts the construction at every epsilon of the grid (rotation fixed)
/// and reports the largest one whose stabilized count equals `target`.
pub fn scan_epsilon(
    spec: &ConstructionSpec,
    eps_grid: &[Rational],
    target: usize,
    schedule: &[usize],
) -> Result<ScanReport, ConstructionError> {
    if !spec.family.uses_epsilon() {
        return Err(ConstructionError::Precondition(format!("family {} has no epsilon", spec.family.name())));
    }
    if eps_grid.is_empty() {
        return Err(ConstructionError::Precondition("empty epsilon grid".into()));
    }
    let mut grid = eps_grid.to_vec();
    grid.sort_by(|a, b| b.cmp(a));
    grid.dedup();
    let mut rows = Vec::with_capacity(grid.len());
    for eps in grid {
        let p = spec.build_with_eps(&eps)?;
        let r = nodal_count(&p, schedule)?;
        rows.push(ScanRow {
            admissible: r.stable && r.total == target,
            eps,
            total: r.total,
            positive: r.positive,
            negative: r.negative,
            stable: r.stable,
        });
    }
    let largest_admissible = rows.iter().find(|r| r.admissible).map(|r| r.eps.clone());
    Ok(ScanReport {
        family: spec.family,
        d: spec.d,
        target,
        flagged: largest_admissible.is_none(),
        rows,
        largest_admissible,
    })
}
