//! Point samples of the nodal set inside a spherical shell of `R^{2+1}`.

use super::NodalError;
use crate::polyring::FloatEvaluator;
use crate::RatPoly;

/// Largest radial spacing between consecutive shells.
pub const MAX_SHELL_GAP: f64 = 0.02;

/// Points `(x, y, t)` where `p` changes sign between neighbouring samples of
/// a latitude-longitude grid on shells of radius in `[1 - delta, 1]`.
///
/// `resolution` latitude bands, twice as many longitudes. Each point is the
/// linear interpolation of the zero along the sampled edge.
pub fn export_nodal_pointcloud(p: &RatPoly, resolution: usize, delta: f64) -> Result<Vec<[f64; 3]>, NodalError> {
    if p.spatial_dim() != 2 {
        return Err(NodalError::UnsupportedDimension { n: p.spatial_dim() });
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(NodalError::Precondition(format!("annulus width must lie in (0, 1), got {delta}")));
    }
    if resolution < 4 {
        return Err(NodalError::Precondition(format!("resolution must be at least 4, got {resolution}")));
    }
    p.parabolic_degree()?;
    let eval = FloatEvaluator::new(p);
    let shells = ((delta / MAX_SHELL_GAP).ceil() as usize).max(1) + 1;
    let (lat, lon) = (resolution, 2 * resolution);
    // grid coordinates are interpolated before mapping to the shell, so
    // every emitted point stays inside the annulus
    let spherical = |s: f64, i: f64, j: f64| -> [f64; 3] {
        let r = 1.0 - delta * s / (shells - 1) as f64;
        let phi = std::f64::consts::PI * (i + 0.5) / lat as f64;
        let theta = std::f64::consts::TAU * j / lon as f64;
        [r * phi.sin() * theta.cos(), r * phi.sin() * theta.sin(), r * phi.cos()]
    };
    let mut values = vec![0.0; shells * lat * lon];
    let idx = |s: usize, i: usize, j: usize| (s * lat + i) * lon + j;
    for s in 0..shells {
        for i in 0..lat {
            for j in 0..lon {
                values[idx(s, i, j)] = eval.eval(&spherical(s as f64, i as f64, j as f64));
            }
        }
    }
    let mut out = Vec::new();
    let mut edge = |a: (usize, usize, usize), b: (usize, usize, usize)| {
        let va = values[idx(a.0, a.1, a.2)];
        let vb = values[idx(b.0, b.1, b.2 % lon)];
        if (va > 0.0) != (vb > 0.0) || va == 0.0 {
            let w = if va == vb { 0.5 } else { va / (va - vb) };
            let lerp = |u: usize, v: usize| u as f64 + w * (v as f64 - u as f64);
            out.push(spherical(lerp(a.0, b.0), lerp(a.1, b.1), lerp(a.2, b.2)));
        }
    };
    for s in 0..shells {
        for i in 0..lat {
            for j in 0..lon {
                edge((s, i, j), (s, i, j + 1));
                if i + 1 < lat {
                    edge((s, i, j), (s, i + 1, j));
                }
                if s + 1 < shells {
                    edge((s, i, j), (s + 1, i, j));
                }
            }
        }
    }
    Ok(out)
}

/// CSV with header `x,y,t` and 17 significant digits per value.
pub fn pointcloud_csv(points: &[[f64; 3]]) -> String {
    let mut s = String::from("x,y,t\n");
    for [x, y, t] in points {
        s.push_str(&format!("{x:.16e},{y:.16e},{t:.16e}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    #[test]
    fn constant_has_empty_cloud() {
        let p = parse_poly("5", 2).unwrap();
        let pts = export_nodal_pointcloud(&p, 32, 0.1).unwrap();
        assert!(pts.is_empty());
        assert_eq!(pointcloud_csv(&pts), "x,y,t\n");
    }

    #[test]
    fn plane_points_lie_near_plane_in_shell() {
        let p = parse_poly("y", 2).unwrap();
        let pts = export_nodal_pointcloud(&p, 32, 0.1).unwrap();
        assert!(!pts.is_empty());
        for [x, y, t] in pts {
            assert!(y.abs() < 1e-12);
            let r = (x * x + y * y + t * t).sqrt();
            assert!(r > 0.9 - 1e-12 && r < 1.0 + 1e-12);
        }
    }

    #[test]
    fn csv_format() {
        let s = pointcloud_csv(&[[1.0, -0.5, 0.25]]);
        let row = s.lines().nth(1).unwrap();
        assert_eq!(row, "1.0000000000000000e0,-5.0000000000000000e-1,2.5000000000000000e-1");
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = parse_poly("y", 2).unwrap();
        assert!(export_nodal_pointcloud(&p, 32, 0.0).is_err());
        assert!(export_nodal_pointcloud(&parse_poly("x", 1).unwrap(), 32, 0.1).is_err());
    }
}
