use serde::{Deserialize, Serialize};

use super::grid::{check_countable, cube_section_sample, SignField};
use super::union_find::UnionFind;
use super::NodalError;
use crate::RatPoly;

/// Nodal-domain count. Counts are stabilized over several resolutions, not
/// certified.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub total: usize,
    #[serde(rename = "pos")]
    pub positive: usize,
    #[serde(rename = "neg")]
    pub negative: usize,
    pub resolutions: Vec<usize>,
    pub stable: bool,
    #[serde(rename = "zero_frac")]
    pub zero_cell_fraction: f64,
    pub method: String,
}

pub const METHOD_CUBE_EXACT: &str = "cube-exact";

impl ComponentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Same-sign, face-adjacent cells are joined (also across cube edges);
/// zero cells belong to no component.
pub fn count_components(field: &SignField) -> ComponentReport {
    let grid = field.grid;
    let mut uf = UnionFind::new(field.signs.len());
    for cell in 0..field.signs.len() {
        let s = field.signs[cell];
        if s == 0 {
            continue;
        }
        for nb in grid.neighbors(cell) {
            if nb > cell && field.signs[nb] == s {
                uf.union(cell, nb);
            }
        }
    }
    let (mut positive, mut negative) = (0, 0);
    for cell in 0..field.signs.len() {
        let s = field.signs[cell];
        if s != 0 && uf.find(cell) == cell {
            if s > 0 {
                positive += 1;
            } else {
                negative += 1;
            }
        }
    }
    ComponentReport {
        total: positive + negative,
        positive,
        negative,
        resolutions: vec![grid.resolution()],
        stable: false,
        zero_cell_fraction: field.zero_cell_fraction(),
        method: METHOD_CUBE_EXACT.to_string(),
    }
}

/// Default resolution schedule by ambient dimension `n + 1`. The planar
/// section is one-dimensional and cheap, so it runs finer.
pub fn default_schedule(n: usize) -> Vec<usize> {
    match n + 1 {
        2 => vec![256, 512, 1024],
        3 => vec![64, 128, 256],
        _ => vec![24, 48, 96],
    }
}

/// [`default_schedule`] widened for degrees above 6, whose domains pinch
/// below the default grids in two and more space variables.
pub fn degree_schedule(n: usize, d: u32) -> Vec<usize> {
    let base = default_schedule(n);
    if d <= 6 || n == 1 {
        return base;
    }
    let r = base[0] * (d as usize - 2);
    vec![r, r * 4 / 3, r * 2]
}

/// Counts at every resolution of `schedule`; the report carries the last
/// resolution's counts and is stable when the last three agree.
pub fn nodal_count(p: &RatPoly, schedule: &[usize]) -> Result<ComponentReport, NodalError> {
    if schedule.len() < 3 || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(NodalError::InvalidSchedule(format!(
            "need at least three strictly increasing resolutions, got {schedule:?}"
        )));
    }
    check_countable(p)?;
    let mut runs = Vec::with_capacity(schedule.len());
    for &res in schedule {
        let field = cube_section_sample(p, res)?;
        runs.push(count_components(&field));
    }
    let tail = &runs[runs.len() - 3..];
    let stable = tail.iter().all(|r| (r.positive, r.negative) == (tail[0].positive, tail[0].negative));
    let mut report = runs.pop().expect("nonempty schedule");
    report.resolutions = schedule.to_vec();
    report.stable = stable;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caloric::basic_hcp;
    use crate::parse_poly;

    #[test]
    fn degree_schedule_matches_default_up_to_six() {
        for n in 1..=3 {
            for d in 0..=6 {
                assert_eq!(degree_schedule(n, d), default_schedule(n));
            }
        }
        assert_eq!(degree_schedule(2, 8), vec![384, 512, 768]);
        assert_eq!(degree_schedule(1, 8), default_schedule(1));
    }

    #[test]
    fn parabola_has_two_domains() {
        let p = parse_poly("2*t + y^2", 2).unwrap();
        let r = count_components(&cube_section_sample(&p, 32).unwrap());
        assert_eq!((r.total, r.positive, r.negative), (2, 1, 1));
    }

    #[test]
    fn constant_sign_field() {
        let p = parse_poly("t^2 + x^4", 1).unwrap();
        let r = count_components(&cube_section_sample(&p, 16).unwrap());
        assert_eq!(r.total, 1);
    }

    #[test]
    fn basic_four_has_four_domains() {
        let r = count_components(&cube_section_sample(&basic_hcp(4), 64).unwrap());
        assert_eq!(r.total, 4);
    }

    #[test]
    fn schedule_validation() {
        let p = basic_hcp(2);
        assert!(nodal_count(&p, &[8, 16]).is_err());
        assert!(nodal_count(&p, &[8, 8, 16]).is_err());
        let r = nodal_count(&p, &[8, 16, 32]).unwrap();
        assert!(r.stable);
        assert_eq!(r.resolutions, vec![8, 16, 32]);
    }

    #[test]
    fn report_json_keys() {
        let r = nodal_count(&basic_hcp(2), &[8, 16, 32]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["total", "pos", "neg", "resolutions", "stable", "zero_frac", "method"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["method"], "cube-exact");
    }
}
