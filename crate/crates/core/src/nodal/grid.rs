//! Sampling on the boundary of the cube `[-1, 1]^{n+1}`.
//!
//! Every parabolic ray `{(lambda x, lambda^2 t) : lambda > 0}` meets the cube
//! boundary exactly once, since `max(lambda |x_i|, lambda^2 |t|)` is strictly
//! increasing in `lambda`. The cube boundary is therefore a cross-section of
//! the dilation action and its nodal components are in bijection with the
//! nodal domains of a parabolically homogeneous polynomial.

use rayon::prelude::*;

use super::sign::ExactSigner;
use super::NodalError;
use crate::RatPoly;

/// Largest degree the counting grid accepts.
pub const MAX_COUNT_DEGREE: u32 = 64;

/// Zero-cell fraction above which the grid is resampled with a jitter.
pub const ZERO_FRACTION_LIMIT: f64 = 1e-3;

/// Cells on the faces of `[-1, 1]^{dim}`, `resolution` cells per face edge.
///
/// Face `f` fixes axis `f / 2` at `-1` (even `f`) or `+1` (odd `f`). The
/// other axes, in increasing order, index the cell. Vertices sit at
/// `(2i - res) / res`. A jittered grid stretches axis `a` by
/// `1 + (a + 1) / (6 res)`: still a box, so still a cross-section, but
/// without the coordinate symmetries that put nodal points on vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossSectionGrid {
    dim: usize,
    resolution: usize,
    jittered: bool,
}

impl CrossSectionGrid {
    pub fn new(dim: usize, resolution: usize, jittered: bool) -> Self {
        assert!((2..=4).contains(&dim), "ambient dimension must be 2..=4");
        assert!(resolution >= 1);
        Self { dim, resolution, jittered }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn jittered(&self) -> bool {
        self.jittered
    }

    pub fn num_faces(&self) -> usize {
        2 * self.dim
    }

    pub fn cells_per_face(&self) -> usize {
        self.resolution.pow(self.dim as u32 - 1)
    }

    pub fn num_cells(&self) -> usize {
        self.num_faces() * self.cells_per_face()
    }

    pub fn vertices_per_face(&self) -> usize {
        (self.resolution + 1).pow(self.dim as u32 - 1)
    }

    /// Common denominator of all vertex and center coordinates.
    pub fn denominator(&self) -> i64 {
        let r = self.resolution as i64;
        if self.jittered {
            6 * r * r
        } else {
            r
        }
    }

    /// Numerator of the stretch of `axis`; the stretch itself is this over
    /// `denominator / res`.
    fn stretch(&self, axis: usize) -> i64 {
        if self.jittered {
            6 * self.resolution as i64 + axis as i64 + 1
        } else {
            1
        }
    }

    /// Point numerators in order `(x1, ..., xn, t)`. Free axes take the
    /// coordinate `(k - res) / res` for `k` counted in half cells, so even
    /// `k` are vertices and odd `k` cell centers.
    fn point_numerators(&self, face: usize, half_steps: &[i64]) -> [i64; 4] {
        let (axis, side) = self.face_axis(face);
        let r = self.resolution as i64;
        let mut out = [0; 4];
        let mut free = half_steps.iter();
        for (a, slot) in out.iter_mut().enumerate().take(self.dim) {
            let k = if a == axis { r + side * r } else { *free.next().expect("free axis") };
            *slot = (k - r) * self.stretch(a);
        }
        out
    }

    /// `(fixed axis, side)` of face `f`, side being `-1` or `+1`.
    pub fn face_axis(&self, face: usize) -> (usize, i64) {
        (face / 2, if face.is_multiple_of(2) { -1 } else { 1 })
    }

    /// Free-axis indices of a cell, in increasing axis order.
    pub fn cell_indices(&self, cell: usize) -> (usize, Vec<usize>) {
        let cpf = self.cells_per_face();
        let face = cell / cpf;
        let mut rest = cell % cpf;
        let mut idx = Vec::with_capacity(self.dim - 1);
        for _ in 0..self.dim - 1 {
            idx.push(rest % self.resolution);
            rest /= self.resolution;
        }
        (face, idx)
    }

    pub fn cell_id(&self, face: usize, idx: &[usize]) -> usize {
        let mut id = 0;
        for &i in idx.iter().rev() {
            id = id * self.resolution + i;
        }
        face * self.cells_per_face() + id
    }

    /// Center numerators over [`denominator`](Self::denominator), in point
    /// order `(x1, ..., xn, t)`.
    pub fn center_numerators(&self, cell: usize) -> Vec<i64> {
        let (face, idx) = self.cell_indices(cell);
        let steps: Vec<i64> = idx.iter().map(|&i| 2 * i as i64 + 1).collect();
        self.point_numerators(face, &steps)[..self.dim].to_vec()
    }

    /// Vertex `v` of a face, vertices indexed like cells with
    /// `resolution + 1` per edge.
    pub fn vertex_numerators(&self, face: usize, v: usize) -> Vec<i64> {
        self.vertex_point(face, v)[..self.dim].to_vec()
    }

    fn vertex_point(&self, face: usize, v: usize) -> [i64; 4] {
        let mut rest = v;
        let mut steps = [0; 3];
        for s in steps.iter_mut().take(self.dim - 1) {
            *s = 2 * (rest % (self.resolution + 1)) as i64;
            rest /= self.resolution + 1;
        }
        self.point_numerators(face, &steps[..self.dim - 1])
    }

    /// Face-local vertex indices of the corners of a cell.
    fn corners(&self, idx: &[usize]) -> Vec<usize> {
        let k = self.dim - 1;
        let side = self.resolution + 1;
        (0..1usize << k)
            .map(|mask| {
                let mut id = 0;
                for a in (0..k).rev() {
                    id = id * side + idx[a] + ((mask >> a) & 1);
                }
                id
            })
            .collect()
    }

    /// Face-adjacent neighbours, including the cells across a ridge on the
    /// neighbouring face.
    pub fn neighbors(&self, cell: usize) -> Vec<usize> {
        let (face, idx) = self.cell_indices(cell);
        let (axis, side) = self.face_axis(face);
        let free_axes: Vec<usize> = (0..self.dim).filter(|&a| a != axis).collect();
        let last = self.resolution - 1;
        let mut out = Vec::with_capacity(2 * (self.dim - 1));
        for (k, &b) in free_axes.iter().enumerate() {
            for step in [-1i64, 1] {
                let j = idx[k] as i64 + step;
                if (0..self.resolution as i64).contains(&j) {
                    let mut n = idx.clone();
                    n[k] = j as usize;
                    out.push(self.cell_id(face, &n));
                } else {
                    // across the ridge onto face (b, step)
                    let target_face = 2 * b + usize::from(step > 0);
                    let mut n = Vec::with_capacity(self.dim - 1);
                    for a in (0..self.dim).filter(|&a| a != b) {
                        if a == axis {
                            n.push(if side < 0 { 0 } else { last });
                        } else {
                            let pos = free_axes.iter().position(|&f| f == a).expect("free axis");
                            n.push(idx[pos]);
                        }
                    }
                    out.push(self.cell_id(target_face, &n));
                }
            }
        }
        out
    }
}

/// Per-cell signs: `+1` or `-1` when `p` has that exact sign at every
/// vertex of the cell, `0` when the cell meets the nodal set (its vertex
/// signs differ or one vertex is an exact zero).
///
/// Cells meeting the nodal set belong to no component. This keeps sign
/// sectors that touch only at a singular point of the nodal set apart.
#[derive(Debug, Clone)]
pub struct SignField {
    pub grid: CrossSectionGrid,
    pub signs: Vec<i8>,
    /// Cells with an exact zero at a vertex.
    pub zero_cells: usize,
}

impl SignField {
    pub fn zero_cell_fraction(&self) -> f64 {
        self.zero_cells as f64 / self.signs.len() as f64
    }
}

pub(crate) fn check_countable(p: &RatPoly) -> Result<u32, NodalError> {
    let n = p.spatial_dim();
    if !(1..=3).contains(&n) {
        return Err(NodalError::UnsupportedDimension { n });
    }
    let d = p.parabolic_degree()?;
    if d == 0 {
        return Err(NodalError::Precondition("constant polynomials have no nodal set to sample".into()));
    }
    if d > MAX_COUNT_DEGREE {
        return Err(NodalError::Precondition(format!("degree {d} exceeds the counting cap {MAX_COUNT_DEGREE}")));
    }
    Ok(d)
}

pub(crate) fn sample_grid(p: &RatPoly, grid: CrossSectionGrid) -> SignField {
    let signer = ExactSigner::new(p);
    let den = grid.denominator();
    let vpf = grid.vertices_per_face();
    let vertex_signs: Vec<i8> = (0..grid.num_faces() * vpf)
        .into_par_iter()
        .with_min_len(1024)
        .map(|v| signer.sign(&grid.vertex_point(v / vpf, v % vpf)[..grid.dim], den))
        .collect();
    let cells: Vec<(i8, bool)> = (0..grid.num_cells())
        .into_par_iter()
        .with_min_len(1024)
        .map(|cell| {
            let (face, idx) = grid.cell_indices(cell);
            let corners = grid.corners(&idx);
            let first = vertex_signs[face * vpf + corners[0]];
            let mut uniform = true;
            let mut zero = false;
            for c in corners {
                let s = vertex_signs[face * vpf + c];
                zero |= s == 0;
                uniform &= s == first;
            }
            (if uniform { first } else { 0 }, zero)
        })
        .collect();
    let zero_cells = cells.iter().filter(|c| c.1).count();
    SignField { grid, signs: cells.into_iter().map(|c| c.0).collect(), zero_cells }
}

/// Samples exact signs of `p` on the cube boundary at the given resolution,
/// resampling on a jittered grid when too many vertices hit the nodal set.
pub fn cube_section_sample(p: &RatPoly, resolution: usize) -> Result<SignField, NodalError> {
    check_countable(p)?;
    if resolution < 2 {
        return Err(NodalError::InvalidSchedule(format!("resolution must be at least 2, got {resolution}")));
    }
    let dim = p.spatial_dim() + 1;
    let field = sample_grid(p, CrossSectionGrid::new(dim, resolution, false));
    if field.zero_cell_fraction() > ZERO_FRACTION_LIMIT {
        return Ok(sample_grid(p, CrossSectionGrid::new(dim, resolution, true)));
    }
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    #[test]
    fn every_cell_has_symmetric_neighbours() {
        for dim in 2..=4 {
            let g = CrossSectionGrid::new(dim, 3, false);
            for c in 0..g.num_cells() {
                let ns = g.neighbors(c);
                assert_eq!(ns.len(), 2 * (dim - 1));
                for n in ns {
                    assert!(g.neighbors(n).contains(&c), "dim {dim}: {c} -> {n} not symmetric");
                }
            }
        }
    }

    #[test]
    fn centers_are_on_exactly_one_face() {
        for jittered in [false, true] {
            let g = CrossSectionGrid::new(3, 4, jittered);
            for c in 0..g.num_cells() {
                let (face, _) = g.cell_indices(c);
                let pts = g.center_numerators(c);
                let on_boundary = (0..3).filter(|&a| pts[a].abs() == g.vertex_numerators(2 * a + 1, 0)[a]).count();
                assert_eq!(on_boundary, 1);
                assert_eq!(pts[face / 2].signum(), if face % 2 == 0 { -1 } else { 1 });
            }
        }
    }

    #[test]
    fn ridge_vertices_are_shared() {
        let g = CrossSectionGrid::new(3, 3, true);
        // last vertex of face x = +1 and of face y = +1 is the corner (1, 1, 1)
        let a = g.vertex_numerators(1, g.vertices_per_face() - 1);
        let b = g.vertex_numerators(3, g.vertices_per_face() - 1);
        assert_eq!(a, b);
    }

    #[test]
    fn crossing_sectors_stay_apart() {
        // four sectors of x*y meet at the origin
        let p = parse_poly("x*y", 2).unwrap();
        let f = cube_section_sample(&p, 8).unwrap();
        assert!(f.signs.contains(&0));
        assert_eq!(f.signs.iter().filter(|&&s| s > 0).count(), f.signs.iter().filter(|&&s| s < 0).count());
    }

    #[test]
    fn sign_of_parabola_on_top_face() {
        let p = parse_poly("2*t + x^2", 2).unwrap();
        let f = cube_section_sample(&p, 4).unwrap();
        let g = f.grid;
        let top = 2 * 2 + 1;
        for c in 0..g.num_cells() {
            if g.cell_indices(c).0 == top {
                assert_eq!(f.signs[c], 1);
            }
        }
        assert!(f.signs.contains(&-1));
    }

    #[test]
    fn sign_of_time() {
        let p = parse_poly("t", 1).unwrap();
        let f = cube_section_sample(&p, 8).unwrap();
        for c in 0..f.grid.num_cells() {
            let t = f.grid.center_numerators(c)[1];
            assert!(f.signs[c] == 0 || f.signs[c] as i64 == t.signum());
        }
        assert!(f.signs.contains(&1) && f.signs.contains(&-1));
    }

    #[test]
    fn odd_polynomial_gives_antisymmetric_field() {
        let p = parse_poly("x", 1).unwrap();
        let f = cube_section_sample(&p, 2).unwrap();
        let g = f.grid;
        for c in 0..g.num_cells() {
            let pt = g.center_numerators(c);
            let mirrored = (0..g.num_cells()).find(|&o| {
                let q = g.center_numerators(o);
                q[0] == -pt[0] && q[1] == pt[1]
            });
            assert_eq!(f.signs[mirrored.unwrap()], -f.signs[c]);
        }
    }

    #[test]
    fn rejects_non_homogeneous() {
        let p = parse_poly("t + x", 1).unwrap();
        assert!(matches!(cube_section_sample(&p, 4), Err(NodalError::Poly(_))));
    }
}
