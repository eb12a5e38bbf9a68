//! Independent numerical oracles. None of them share code with the library's
//! exact pipeline beyond plain polynomial evaluation.

use std::collections::{HashMap, VecDeque};

use calorics::RatPoly;

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
// Gauss weights for the odd-indexed Kronrod nodes
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let mut k = 0.0;
    let mut g = 0.0;
    for (i, (&x, &w)) in KRONROD_NODES.iter().zip(&KRONROD_WEIGHTS).enumerate() {
        let v = if x == 0.0 { f(c) } else { f(c - h * x) + f(c + h * x) };
        k += w * v;
        if i % 2 == 1 {
            g += GAUSS_WEIGHTS[i / 2] * v;
        }
    }
    (h * k, (h * (k - g)).abs())
}

/// Integrates `f` over `[a, b]` by adaptive 7/15-point Gauss-Kronrod,
/// bisecting until every piece's error estimate meets its share of `tol`.
pub fn adaptive_kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let mut stack = vec![(a, b, 0u32)];
    let mut total = 0.0;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (value, err) = kronrod(f, lo, hi);
        if err <= tol * (hi - lo) / (b - a) || depth >= 40 {
            total += value;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    total
}

/// `int_R x^{2m} e^{-x^2/4} dx / sqrt(pi)` by quadrature on `[0, 80]`.
pub fn moment_by_quadrature(m: u32) -> f64 {
    let f = |x: f64| x.powi(2 * m as i32) * (-x * x / 4.0).exp();
    // rough scale so the tolerance is relative
    let scale = adaptive_kronrod(&f, 0.0, 80.0, 1.0);
    2.0 * adaptive_kronrod(&f, 0.0, 80.0, scale * 1e-13) / std::f64::consts::PI.sqrt()
}

/// Horner-free float evaluation straight from the term list.
pub fn eval_terms(p: &RatPoly, point: &[f64]) -> f64 {
    let n = p.spatial_dim();
    p.terms()
        .map(|(e, c)| {
            let mut v = num_traits::ToPrimitive::to_f64(c).unwrap();
            for (x, &k) in point.iter().zip(&e.space_exps) {
                v *= x.powi(k as i32);
            }
            v * point[n].powi(e.t_exp as i32)
        })
        .sum()
}

/// Nodal domains of an `n = 2` polynomial on the Euclidean unit sphere of
/// `R^3 = (x, y, t)`, from float signs at the vertices of an `lat x 2 lat`
/// latitude-longitude grid. A cell takes a sign when all its vertices
/// agree, cells meet across edges, longitude wraps, and the first and last
/// rings close up around the poles through the shared pole vertex.
pub fn sphere_count(p: &RatPoly, lat: usize) -> (usize, usize) {
    assert_eq!(p.spatial_dim(), 2);
    let lon = 2 * lat;
    let pi = std::f64::consts::PI;
    let floor = 1e-12 * p.max_abs_coeff();
    let vertex = |i: usize, j: usize| -> i8 {
        let phi = pi * i as f64 / lat as f64;
        let th = 2.0 * pi * j as f64 / lon as f64;
        let v = eval_terms(p, &[phi.sin() * th.cos(), phi.sin() * th.sin(), phi.cos()]);
        if v > floor {
            1
        } else if v < -floor {
            -1
        } else {
            0
        }
    };
    let vs: Vec<Vec<i8>> = (0..=lat).map(|i| (0..lon).map(|j| vertex(i, j)).collect()).collect();
    let mut sign = vec![0i8; lat * lon];
    for i in 0..lat {
        for j in 0..lon {
            let jn = (j + 1) % lon;
            let c = [vs[i][j], vs[i][jn], vs[i + 1][j], vs[i + 1][jn]];
            if c.iter().all(|&s| s == c[0]) {
                sign[i * lon + j] = c[0];
            }
        }
    }
    let neighbours = |v: usize| -> Vec<usize> {
        let (i, j) = (v / lon, v % lon);
        let mut out = vec![i * lon + (j + 1) % lon, i * lon + (j + lon - 1) % lon];
        if i > 0 {
            out.push(v - lon);
        }
        if i + 1 < lat {
            out.push(v + lon);
        }
        out
    };
    let mut seen = vec![false; sign.len()];
    let (mut pos, mut neg) = (0, 0);
    for start in 0..sign.len() {
        let s = sign[start];
        if s == 0 || seen[start] {
            continue;
        }
        if s > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in neighbours(v) {
                if !seen[w] && sign[w] == s {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (pos, neg)
}

/// Number of single-linkage clusters at distance threshold `gap`, using a
/// spatial hash with cell size `gap`.
pub fn single_linkage_clusters(points: &[[f64; 3]], gap: f64) -> usize {
    let key = |p: &[f64; 3]| p.map(|c| (c / gap).floor() as i64);
    let mut buckets: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        buckets.entry(key(p)).or_default().push(i);
    }
    let mut seen = vec![false; points.len()];
    let mut clusters = 0;
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        clusters += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let k = key(&points[i]);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    for dz in -1..=1 {
                        let Some(bucket) = buckets.get(&[k[0] + dx, k[1] + dy, k[2] + dz]) else { continue };
                        for &j in bucket {
                            if seen[j] {
                                continue;
                            }
                            let d2: f64 = (0..3).map(|a| (points[i][a] - points[j][a]).powi(2)).sum();
                            if d2 <= gap * gap {
                                seen[j] = true;
                                stack.push(j);
                            }
                        }
                    }
                }
            }
        }
    }
    clusters
}
