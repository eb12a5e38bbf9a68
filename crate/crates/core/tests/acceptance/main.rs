//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p calorics --test acceptance`.

mod oracles;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use calorics::caloric::{
    basic_hcp, basis, basis_with_indices, chain_check, eigen_check, gaussian_moment, hermite_relation_check,
    interlacing_check, parabola_factors, product_hcp, weighted_inner_product,
};
use calorics::constructions::{
    fixture, lewy_2mod4, odd_construction, product_lower, rational_rotation, zero_mod4,
};
use calorics::nodal::{
    bounds_report, default_schedule, default_slice_half_width, export_nodal_pointcloud, nodal_count, slice_count,
    ComponentReport,
};
use calorics::polyring::binomial;
use calorics::{RatPoly, Rational};
use num_traits::{ToPrimitive, Zero};

type Verdict = Result<String, String>;

/// Every polynomial counted anywhere in the suite.
static COUNTED: Mutex<Vec<(String, RatPoly, ComponentReport)>> = Mutex::new(Vec::new());

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn count(label: &str, p: &RatPoly) -> ComponentReport {
    let r = nodal_count(p, &default_schedule(p.spatial_dim())).expect("countable");
    COUNTED.lock().unwrap().push((label.to_string(), p.clone(), r.clone()));
    r
}

fn expect_count(label: &str, p: &RatPoly, want: usize, failures: &mut Vec<String>) -> String {
    let r = count(label, p);
    if r.total != want || !r.stable {
        failures.push(format!("{label}: N = {} (stable {}), want {want}", r.total, r.stable));
    }
    format!("{label}={}", r.total)
}

fn verdict(summary: Vec<String>, failures: Vec<String>) -> Verdict {
    if failures.is_empty() {
        Ok(summary.join(" "))
    } else {
        Err(failures.join("; "))
    }
}

fn exact_identities() -> Verdict {
    let mut failures = Vec::new();
    for d in 0..=20 {
        if !basic_hcp(d).heat_apply().is_zero() {
            failures.push(format!("heat residual for p_{d}"));
        }
        if let Err(e) = hermite_relation_check(d) {
            failures.push(e.to_string());
        }
    }
    let mut checked = 0;
    for n in 1..=3 {
        for d in 0..=6 {
            for p in basis(n, d) {
                if let Err(e) = chain_check(&p) {
                    failures.push(format!("chain n={n} d={d}: {e}"));
                }
                if let Err(e) = eigen_check(&p) {
                    failures.push(format!("eigen n={n} d={d}: {e}"));
                }
                checked += 1;
            }
        }
    }
    verdict(vec![format!("21 basic degrees, {checked} basis elements")], failures)
}

fn dimension_count() -> Verdict {
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for d in 0..=8u32 {
            let got = basis(n, d).len() as u128;
            let want = binomial(n as u64 - 1 + u64::from(d), n as u64 - 1);
            if got != want {
                failures.push(format!("n={n} d={d}: {got} != {want}"));
            }
        }
    }
    verdict(vec!["n <= 4, d <= 8".into()], failures)
}

fn orthogonality() -> Verdict {
    let mut failures = Vec::new();
    let elems: Vec<_> = (0..=4).flat_map(|d| basis_with_indices(2, d)).collect();
    for (i, (a, pa)) in elems.iter().enumerate() {
        for (b, pb) in &elems[i..] {
            let w = weighted_inner_product(pa, pb).unwrap();
            if a == b && w.rational_part <= Rational::zero() {
                failures.push(format!("norm of {:?} not positive", a.entries()));
            }
            if a != b && !w.rational_part.is_zero() {
                failures.push(format!("{:?} . {:?} = {}", a.entries(), b.entries(), w.rational_part));
            }
        }
    }
    let mut worst: f64 = 0.0;
    for m in 0..=8 {
        let exact = gaussian_moment(2 * m).to_f64().unwrap();
        let quad = oracles::moment_by_quadrature(m);
        let rel = ((quad - exact) / exact).abs();
        worst = worst.max(rel);
        if rel >= 1e-10 {
            failures.push(format!("moment {m}: quadrature {quad} vs {exact}"));
        }
    }
    let _ = product_hcp;
    verdict(vec![format!("{} indices, worst moment rel err {worst:.1e}", elems.len())], failures)
}

fn one_dimensional_counts() -> Verdict {
    let mut failures = Vec::new();
    let summary = (2..=8u32)
        .map(|d| expect_count(&format!("p{d}"), &basic_hcp(d), 2 * d.div_ceil(2) as usize, &mut failures))
        .collect();
    verdict(summary, failures)
}

fn fixture_counts() -> Verdict {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (id, want) in [("n2d3", 2), ("n2d4", 3), ("n3d4", 2), ("deg2", 2), ("deg2_n2_j1", 2), ("prod_n2d4", 6)] {
        summary.push(expect_count(id, &fixture(id).unwrap(), want, &mut failures));
    }
    verdict(summary, failures)
}

fn figure_reproductions() -> Verdict {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    let (c, s) = rational_rotation(std::f64::consts::PI / 10.0);
    let lewy = lewy_2mod4(6, &q(1, 20)).unwrap();
    let odd = odd_construction(5, &q(3, 10), &c, &s).unwrap();
    let zm4 = zero_mod4(4, &q(1, 5), &c, &s).unwrap();
    summary.push(expect_count("lewy6", &lewy, 2, &mut failures));
    summary.push(expect_count("odd5", &odd, 2, &mut failures));
    summary.push(expect_count("zero_mod4_4", &zm4, 3, &mut failures));
    for (label, p, delta) in [("lewy6", &lewy, 0.05), ("odd5", &odd, 0.2), ("zero_mod4_4", &zm4, 0.2)] {
        let cloud = export_nodal_pointcloud(p, 128, delta).unwrap();
        if cloud.is_empty() {
            failures.push(format!("{label}: empty point cloud"));
        }
        summary.push(format!("{label}:{}pts", cloud.len()));
        if label == "zero_mod4_4" {
            let k = oracles::single_linkage_clusters(&cloud, 0.05);
            summary.push(format!("clusters={k}"));
            if k != 2 {
                failures.push(format!("{label}: {k} clusters, want 2"));
            }
        }
    }
    verdict(summary, failures)
}

/// `Some(k)` when `a = k b` coefficientwise, `k` taken from the first term.
fn global_scale(a: &RatPoly, b: &RatPoly) -> Result<Rational, String> {
    let (e, ca) = a.canonical_terms()[0];
    let (e, ca) = (e.clone(), ca.clone());
    let cb = b.coeff(&e);
    if cb.is_zero() {
        return Err(format!("construction lacks the term {e:?}"));
    }
    let k = ca / cb;
    let diff = a - &b.scale(&k);
    if diff.is_zero() {
        Ok(k)
    } else {
        Err(format!("scale {k} leaves residual {diff}"))
    }
}

fn scale_match() -> Verdict {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    let odd = odd_construction(3, &q(1, 1), &q(3, 5), &q(4, 5)).unwrap();
    let zm4 = zero_mod4(4, &q(1, 2), &q(3, 5), &q(4, 5)).unwrap();
    for (id, p) in [("n2d3", odd), ("n2d4", zm4)] {
        match global_scale(&fixture(id).unwrap(), &p) {
            Ok(k) => summary.push(format!("{id} = {k} x construction")),
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    verdict(summary, failures)
}

fn bounds() -> Verdict {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (n, d) in [(2usize, 4u32), (2, 5), (2, 6), (3, 6)] {
        let p = product_lower(n, d).unwrap();
        let r = count(&format!("product_n{n}d{d}"), &p);
        let lower = (d as usize / n).pow(n as u32);
        summary.push(format!("prod({n},{d})={}>={lower}", r.total));
        if r.total < lower {
            failures.push(format!("product ({n},{d}): N = {} < {lower}", r.total));
        }
    }
    let counted = COUNTED.lock().unwrap().clone();
    let mut slice_checks = 0;
    for (label, p, r) in &counted {
        let n = p.spatial_dim();
        let d = p.parabolic_degree().unwrap();
        let upper = binomial((n as u64) + u64::from(d), n as u64);
        if r.total < 2 || r.total as u128 > upper {
            failures.push(format!("{label}: N = {} outside [2, {upper}]", r.total));
        }
        if let Err(e) = bounds_report(n, d, Some(r)) {
            failures.push(format!("{label}: {e}"));
        }
        let res = match n {
            1 => 1024,
            2 => 256,
            _ => 48,
        };
        let s = slice_count(p, default_slice_half_width(d), res).unwrap();
        if let Some(ok) = s.bound_holds(r.total) {
            slice_checks += 1;
            if !ok {
                failures.push(format!("{label}: N = {} > slice count {}", r.total, s.count));
            }
        }
    }
    summary.push(format!("{} counted, {slice_checks} slice bounds", counted.len()));
    verdict(summary, failures)
}

fn interlacing() -> Verdict {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for d in 2..=16 {
        match parabola_factors(d, 1e-10) {
            Ok(f) => worst = worst.max(f.reconstruction_error),
            Err(e) => failures.push(e.to_string()),
        }
        if d >= 3 {
            if let Err(e) = interlacing_check(d, 0.0) {
                failures.push(e.to_string());
            }
        }
    }
    verdict(vec![format!("worst reconstruction error {worst:.1e}")], failures)
}

fn cross_section_oracle() -> Verdict {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for id in ["n2d3", "n2d4", "prod_n2d4", "deg2_n2_j1", "deg2_n2_j2"] {
        let p = fixture(id).unwrap();
        let cube = count(id, &p);
        let sphere = oracles::sphere_count(&p, 256);
        summary.push(format!("{id}:{}/{}", cube.total, sphere.0 + sphere.1));
        if (cube.positive, cube.negative) != sphere {
            failures.push(format!("{id}: cube ({}, {}) vs sphere {sphere:?}", cube.positive, cube.negative));
        }
    }
    verdict(summary, failures)
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    // bounds runs last: it audits every count made by the others
    let criteria = [
        Criterion { id: 1, title: "exact identities", budget: secs(5), run: exact_identities },
        Criterion { id: 2, title: "dimension count", budget: None, run: dimension_count },
        Criterion { id: 3, title: "orthogonality", budget: None, run: orthogonality },
        Criterion { id: 4, title: "1-D counts", budget: secs(30), run: one_dimensional_counts },
        Criterion { id: 5, title: "paper fixtures", budget: secs(120), run: fixture_counts },
        Criterion { id: 6, title: "figure reproductions", budget: secs(180), run: figure_reproductions },
        Criterion { id: 7, title: "scale match", budget: None, run: scale_match },
        Criterion { id: 9, title: "interlacing and factorization", budget: secs(5), run: interlacing },
        Criterion { id: 10, title: "cross-section oracle", budget: None, run: cross_section_oracle },
        Criterion { id: 8, title: "bound enforcement", budget: None, run: bounds },
    ];
    let mut lines = Vec::new();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match outcome {
            Ok(s) => ("PASS", s),
            Err(s) => {
                failed += 1;
                ("FAIL", s)
            }
        };
        eprintln!("criterion {} done in {:.2}s", c.id, elapsed.as_secs_f64());
        lines.push((c.id, format!("{tag} criterion {:>2} {} ({:.2}s): {detail}", c.id, c.title, elapsed.as_secs_f64())));
    }
    lines.sort_by_key(|(id, _)| *id);
    for (_, line) in &lines {
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
