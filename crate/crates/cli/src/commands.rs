use std::io::{ErrorKind, Write};
use std::path::Path;

use calorics::caloric::{chain_check, eigen_check, is_caloric};
use calorics::constructions::{default_eps_grid, scan_epsilon, ConstructionSpec, Family, Rotation};
use calorics::nodal::{
    bounds_for_count, degree_schedule, default_slice_half_width, export_nodal_pointcloud, nodal_count,
    pointcloud_csv, slice_count, NodalError,
};
use calorics::scalar::{format_rational, parse_rational};
use calorics::PolyError;
use serde_json::{json, Value};

use crate::source::{BuildArgs, SourceArgs};
use crate::Failure;

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(Failure::Io(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn nodal_failure(e: NodalError) -> Failure {
    Failure::Config(e.to_string())
}

fn parse_schedule(text: Option<&str>, n: usize, d: u32) -> Result<Vec<usize>, Failure> {
    let Some(text) = text else { return Ok(degree_schedule(n, d)) };
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::Config(format!("bad resolution `{s}` in schedule"))))
        .collect()
}

pub fn gen(family: &str, id: Option<&str>, build: &BuildArgs, out: Option<&Path>) -> Result<(), Failure> {
    let loaded = build.construct(family, id)?;
    let mut value = serde_json::to_value(loaded.poly.to_json_value()).expect("polynomial serializes");
    value["expr"] = json!(loaded.poly.to_string());
    value["origin"] = loaded.origin;
    let text = serde_json::to_string(&value).expect("json");
    if let Some(path) = out {
        write_out(path, &format!("{text}\n"))?;
    }
    emit(&format!("{text}\n"))?;
    eprintln!("{}", loaded.poly);
    Ok(())
}

fn check(result: Result<(), String>) -> Value {
    match result {
        Ok(()) => json!({"pass": true}),
        Err(detail) => json!({"pass": false, "detail": detail}),
    }
}

pub fn verify(source: &SourceArgs) -> Result<(), Failure> {
    let loaded = source.load()?;
    let p = &loaded.poly;
    let degree = p.parabolic_degree();
    let homogeneous = degree.as_ref().map(|_| ()).map_err(PolyError::to_string);
    let caloric = is_caloric(p).map(|_| ()).map_err(|e| e.to_string());
    let chain = chain_check(p).map(|_| ()).map_err(|e| e.to_string());
    let eigen = eigen_check(p).map_err(|e| e.to_string());
    let pass = homogeneous.is_ok() && caloric.is_ok() && chain.is_ok() && eigen.is_ok();
    let report = json!({
        "expr": p.to_string(),
        "n": p.spatial_dim(),
        "degree": degree.ok(),
        "checks": {
            "parabolic_degree": check(homogeneous),
            "caloric": check(caloric),
            "chain": check(chain),
            "eigen": check(eigen),
        },
        "pass": pass,
    });
    emit(&format!("{report}\n"))?;
    if pass {
        eprintln!("all checks pass");
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

pub struct CountOptions {
    pub schedule: Option<String>,
    pub assert: Option<usize>,
    pub slice: bool,
    pub slice_width: Option<f64>,
    pub slice_resolution: usize,
    pub bounds: bool,
}

pub fn count(source: &SourceArgs, opts: &CountOptions) -> Result<(), Failure> {
    let loaded = source.load()?;
    let p = &loaded.poly;
    let n = p.spatial_dim();
    let d = p.parabolic_degree().map_err(|e| Failure::Config(e.to_string()))?;
    let schedule = parse_schedule(opts.schedule.as_deref(), n, d)?;
    let report = nodal_count(p, &schedule).map_err(nodal_failure)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    let mut problems = Vec::new();
    if opts.slice {
        let width = opts.slice_width.unwrap_or_else(|| default_slice_half_width(d));
        let s = slice_count(p, width, opts.slice_resolution).map_err(nodal_failure)?;
        let mut sv = serde_json::to_value(&s).expect("slice serializes");
        sv["bound_holds"] = json!(s.bound_holds(report.total));
        value["slice"] = sv;
    }
    if opts.bounds {
        match bounds_for_count(n, d, Some(report.total)) {
            Ok(b) => value["bounds"] = serde_json::to_value(&b).expect("bounds serialize"),
            Err(e @ NodalError::BoundViolation { .. }) => problems.push(e.to_string()),
            Err(e) => return Err(nodal_failure(e)),
        }
    }
    emit(&format!("{value}\n"))?;
    eprintln!(
        "N = {} ({} positive, {} negative), {}",
        report.total,
        report.positive,
        report.negative,
        if report.stable { "stable" } else { "not stable" }
    );
    if let Some(want) = opts.assert {
        if report.total != want {
            problems.push(format!("count {} differs from asserted {want}", report.total));
        }
        if !report.stable {
            problems.push("count is not stable across the schedule".into());
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(problems.join("; ")))
    }
}

pub fn scan(
    family: &str,
    build: &BuildArgs,
    target: Option<usize>,
    eps_grid: Option<&str>,
    schedule: Option<&str>,
    as_json: bool,
) -> Result<(), Failure> {
    let family: Family = family.parse().map_err(|e: calorics::constructions::ConstructionError| Failure::Config(e.to_string()))?;
    if !family.uses_epsilon() {
        return Err(Failure::Config(format!("{} has no epsilon to scan", family.name())));
    }
    let d = build.degree.ok_or_else(|| Failure::Config("scan needs -d".into()))?;
    let mut spec = ConstructionSpec::new(family, d);
    if let Some(r) = &build.rot {
        spec.rot = Some(Rotation::parse(r).ok_or_else(|| Failure::Config(format!("bad --rot `{r}`")))?);
    }
    let grid = match eps_grid {
        Some(text) => text
            .split(',')
            .map(|s| parse_rational(s.trim()).ok_or_else(|| Failure::Config(format!("bad epsilon `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?,
        None => default_eps_grid(family, d),
    };
    let target = target.or(family.target_count()).expect("perturbative family has a target");
    let schedule = parse_schedule(schedule, spec.n, d)?;
    let report = scan_epsilon(&spec, &grid, target, &schedule).map_err(|e| Failure::Config(e.to_string()))?;
    if as_json {
        emit(&format!("{}\n", serde_json::to_string(&report).expect("report serializes")))?;
    } else {
        let summary = match &report.largest_admissible {
            Some(e) => format!("# largest admissible eps: {}", format_rational(e)),
            None => "# no admissible eps in grid".to_string(),
        };
        emit(&format!("{}{summary}\n", report.to_csv()))?;
    }
    if report.flagged {
        Err(Failure::Assertion(format!("no epsilon in the grid reaches N = {target}")))
    } else {
        Ok(())
    }
}

pub fn export(source: &SourceArgs, resolution: usize, delta: f64, out: Option<&Path>) -> Result<(), Failure> {
    let loaded = source.load()?;
    let points = export_nodal_pointcloud(&loaded.poly, resolution, delta).map_err(nodal_failure)?;
    if points.is_empty() {
        eprintln!("warning: no sign changes in the shell; the point cloud is empty");
    } else {
        eprintln!("{} points", points.len());
    }
    let csv = pointcloud_csv(&points);
    match out {
        Some(path) => write_out(path, &csv),
        None => emit(&csv),
    }
}

pub fn bounds(n: usize, d: u32, count: Option<usize>) -> Result<(), Failure> {
    match bounds_for_count(n, d, count) {
        Ok(b) => {
            emit(&format!("{}\n", serde_json::to_string(&b).expect("bounds serialize")))
        }
        Err(e @ NodalError::BoundViolation { .. }) => Err(Failure::Assertion(e.to_string())),
        Err(e) => Err(nodal_failure(e)),
    }
}
