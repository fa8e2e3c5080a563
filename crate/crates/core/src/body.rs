//! Concrete convex bodies: polytopes with paired vertex and facet
//! representations, their support functions, volumes, surface area measures,
//! Minkowski sums, and GL(n) actions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::hrep;
use crate::hull;
use crate::linalg::{self, dist, dot, norm, LinearMap};
use crate::math;
use crate::measure::DiscreteSphericalMeasure;

/// A unit vector on S^{n-1}; normalized on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction(Vec<f64>);

impl Direction {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        Ok(Direction(linalg::normalize(&coords)?))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn negated(&self) -> Self {
        Direction(self.0.iter().map(|x| -x).collect())
    }
}

/// A facet of a full-dimensional polytope: outer unit normal, support number,
/// area, and its boundary ring as indices into the vertex list.
#[derive(Debug, Clone)]
pub struct Facet {
    pub normal: Direction,
    pub offset: f64,
    pub area: f64,
    pub vertex_ids: Vec<usize>,
}

/// A convex polytope held as paired vertex and facet lists. Degenerate
/// (lower-dimensional) polytopes keep their vertices but carry no facets;
/// operations that need a body reject them.
#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    facets: Vec<Facet>,
}

impl Polytope {
    /// Builds the convex hull of a point set. A point set that is not
    /// full-dimensional is accepted and yields a facet-free polytope.
    pub fn from_vertices(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeomError::Invalid("empty vertex list".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, got: p.len() });
        }
        if dim < 2 {
            return Err(GeomError::UnsupportedDimension(dim));
        }
        if dim > 3 {
            // Support-function operations still work off the vertices.
            return Ok(Polytope { dim, vertices: points, facets: Vec::new() });
        }
        match hull::convex_hull(&points, dim) {
            Ok(h) => {
                let facets = h
                    .facets
                    .into_iter()
                    .map(|f| {
                        Ok(Facet {
                            normal: Direction::new(f.normal)?,
                            offset: f.offset,
                            area: f.area,
                            vertex_ids: f.vertex_ids,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Polytope { dim, vertices: h.vertices, facets })
            }
            Err(GeomError::NotFullDimensional) => {
                let mut verts: Vec<Vec<f64>> = Vec::new();
                for p in points {
                    if !verts.iter().any(|q| dist(&p, q) < 1e-12) {
                        verts.push(p);
                    }
                }
                Ok(Polytope { dim, vertices: verts, facets: Vec::new() })
            }
            Err(e) => Err(e),
        }
    }

    /// Builds the bounded intersection of the halfspaces `x . n_i <= h_i`.
    pub fn from_halfspaces(dim: usize, normals: Vec<Vec<f64>>, offsets: Vec<f64>) -> Result<Self> {
        if normals.len() != offsets.len() {
            return Err(GeomError::Invalid("normals/offsets length mismatch".into()));
        }
        let mut ns: Vec<Vec<f64>> = Vec::new();
        let mut hs: Vec<f64> = Vec::new();
        for (n, h) in normals.into_iter().zip(offsets) {
            if n.len() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, got: n.len() });
            }
            let u = linalg::normalize(&n)?;
            let h = h / norm(&n);
            // Coincident directions keep the tighter constraint.
            match ns.iter().position(|v| dist(v, &u) < 1e-9) {
                Some(i) => hs[i] = hs[i].min(h),
                None => {
                    ns.push(u);
                    hs.push(h);
                }
            }
        }
        let geom = hrep::facet_geometry(&ns, &hs, dim)?;
        Self::from_facet_geometry(dim, &ns, &hs, &geom)
    }

    pub(crate) fn from_facet_geometry(
        dim: usize,
        normals: &[Vec<f64>],
        offsets: &[f64],
        geom: &[hrep::FacetGeom],
    ) -> Result<Self> {
        let vertices = hrep::collect_vertices(geom);
        if vertices.len() < dim + 1 {
            return Err(GeomError::NotFullDimensional);
        }
        let mut scale = 1.0f64;
        for v in &vertices {
            for &x in v {
                scale = scale.max(math::abs(x));
            }
        }
        let mut facets = Vec::new();
        for (i, fg) in geom.iter().enumerate() {
            if fg.verts.is_empty() || fg.area <= 0.0 {
                continue;
            }
            let vertex_ids = fg
                .verts
                .iter()
                .map(|v| {
                    vertices
                        .iter()
                        .position(|q| dist(v, q) < 1e-8 * scale)
                        .ok_or_else(|| GeomError::Invalid("facet vertex not collected".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            facets.push(Facet {
                normal: Direction::new(normals[i].clone())?,
                offset: offsets[i],
                area: fg.area,
                vertex_ids,
            });
        }
        if facets.len() < dim + 1 {
            return Err(GeomError::NotFullDimensional);
        }
        Ok(Polytope { dim, vertices, facets })
    }

    /// The axis-aligned box with the given halfwidths, centered at the origin.
    pub fn boxed(halfwidths: &[f64]) -> Result<Self> {
        let dim = halfwidths.len();
        if halfwidths.iter().any(|&w| w <= 0.0) {
            return Err(GeomError::Invalid("box halfwidths must be positive".into()));
        }
        let mut verts = vec![Vec::with_capacity(dim)];
        for &w in halfwidths {
            let mut next = Vec::with_capacity(verts.len() * 2);
            for v in verts {
                let mut a = v.clone();
                a.push(-w);
                let mut b = v;
                b.push(w);
                next.push(a);
                next.push(b);
            }
            verts = next;
        }
        Self::from_vertices(dim, verts)
    }

    /// The cube `[-h, h]^n`.
    pub fn cube(dim: usize, halfwidth: f64) -> Result<Self> {
        Self::boxed(&vec![halfwidth; dim])
    }

    /// The cross-polytope `conv{±e_1, ..., ±e_n}` scaled by `r`.
    pub fn cross_polytope(dim: usize, r: f64) -> Result<Self> {
        let mut verts = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            for s in [-r, r] {
                let mut p = vec![0.0; dim];
                p[k] = s;
                verts.push(p);
            }
        }
        Self::from_vertices(dim, verts)
    }

    /// An inscribed polytope approximation of the ball `r B^3` built from an
    /// icosphere with `4^depth * 20` facets' worth of vertices.
    pub fn ball_approx(r: f64, depth: usize) -> Result<Self> {
        if r <= 0.0 {
            return Err(GeomError::Invalid("ball radius must be positive".into()));
        }
        let dirs = crate::oracle::icosphere_directions(depth);
        let verts = dirs.iter().map(|u| linalg::scale(u, r)).collect();
        Self::from_vertices(3, verts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.facets.is_empty()
    }

    fn require_body(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(GeomError::NotFullDimensional)
        }
    }

    /// `h_P(x) = max_i x . v_i`; exact for polytopes.
    pub fn support(&self, x: &[f64]) -> f64 {
        self.vertices
            .iter()
            .map(|v| dot(x, v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn facet_rings(&self) -> Vec<Vec<Vec<f64>>> {
        self.facets
            .iter()
            .map(|f| f.vertex_ids.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn volume(&self) -> Result<f64> {
        self.require_body()?;
        Ok(hrep::volume_centroid(&self.facet_rings(), self.dim).0)
    }

    pub fn centroid(&self) -> Result<Vec<f64>> {
        self.require_body()?;
        Ok(hrep::volume_centroid(&self.facet_rings(), self.dim).1)
    }

    /// Total boundary measure `S(P)`.
    pub fn surface_area(&self) -> Result<f64> {
        self.require_body()?;
        Ok(self.facets.iter().map(|f| f.area).sum())
    }

    /// One atom per facet: `(normal, facet area)`.
    pub fn surface_area_measure(&self) -> Result<DiscreteSphericalMeasure> {
        self.require_body()?;
        DiscreteSphericalMeasure::new(
            self.dim,
            self.facets
                .iter()
                .map(|f| (f.normal.coords().to_vec(), f.area))
                .collect(),
        )
    }

    pub fn translate(&self, t: &[f64]) -> Result<Self> {
        if t.len() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: t.len() });
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| linalg::add(v, t)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: f.offset + dot(f.normal.coords(), t),
                    area: f.area,
                    vertex_ids: f.vertex_ids.clone(),
                })
                .collect(),
        })
    }

    /// Translates the centroid to the origin.
    pub fn recentered(&self) -> Result<Self> {
        let c = self.centroid()?;
        self.translate(&linalg::scale(&c, -1.0))
    }

    /// The dilate `aP` for `a > 0`.
    pub fn scaled(&self, a: f64) -> Result<Self> {
        if a <= 0.0 {
            return Err(GeomError::ZeroScale);
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| linalg::scale(v, a)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: a * f.offset,
                    area: math::powf(a, (self.dim - 1) as f64) * f.area,
                    vertex_ids: f.vertex_ids.clone(),
                })
                .collect(),
        })
    }

    /// The reflection `-P`.
    pub fn reflected(&self) -> Self {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| linalg::scale(v, -1.0)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.negated(),
                    offset: f.offset,
                    area: f.area,
                    vertex_ids: f.vertex_ids.clone(),
                })
                .collect(),
        }
    }

    pub fn is_o_symmetric(&self, tol: f64) -> bool {
        self.vertices.iter().all(|v| {
            let nv = linalg::scale(v, -1.0);
            self.vertices.iter().any(|w| dist(w, &nv) < tol)
        })
    }

    /// `P + Q`: the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Self> {
        if self.dim != other.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(linalg::add(a, b));
            }
        }
        Self::from_vertices(self.dim, sums)
    }

    /// Maps the vertices by `phi` and rebuilds the facet structure.
    pub fn apply_linear(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: phi.dim() });
        }
        let mapped = self.vertices.iter().map(|v| phi.apply(v)).collect();
        Self::from_vertices(self.dim, mapped)
    }

    /// Consistency check used by tests: every vertex obeys every facet
    /// inequality, and each facet's offset is attained by its ring.
    pub fn validate(&self, tol: f64) -> Result<()> {
        for f in &self.facets {
            for v in &self.vertices {
                if dot(f.normal.coords(), v) > f.offset + tol {
                    return Err(GeomError::Invalid("vertex violates facet inequality".into()));
                }
            }
            let attained = f
                .vertex_ids
                .iter()
                .filter(|&&i| math::abs(dot(f.normal.coords(), &self.vertices[i]) - f.offset) < tol)
                .count();
            if attained < self.dim {
                return Err(GeomError::Invalid("facet offset not attained".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_examples() {
        // Cube [-1/2,1/2]^3 at x=(1,1,1) -> 3/2; any P at o -> 0.
        let cube = Polytope::cube(3, 0.5).unwrap();
        assert!((cube.support(&[1.0, 1.0, 1.0]) - 1.5).abs() < 1e-12);
        assert_eq!(cube.support(&[0.0, 0.0, 0.0]), 0.0);

        // Octahedron at x=(2,1,0) -> 2, the brute-force max over 6 vertices.
        let oct = Polytope::cross_polytope(3, 1.0).unwrap();
        let x = [2.0, 1.0, 0.0];
        let brute = oct
            .vertices()
            .iter()
            .map(|v| dot(&x, v))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((oct.support(&x) - 2.0).abs() < 1e-12);
        assert!((brute - 2.0).abs() < 1e-12);
    }

    #[test]
    fn volumes() {
        assert!((Polytope::cube(3, 0.5).unwrap().volume().unwrap() - 1.0).abs() < 1e-12);
        assert!((Polytope::cube(3, 1.0).unwrap().volume().unwrap() - 8.0).abs() < 1e-12);
        assert!(
            (Polytope::cross_polytope(3, 1.0).unwrap().volume().unwrap() - 4.0 / 3.0).abs()
                < 1e-12
        );
    }

    #[test]
    fn centroids() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        assert!(norm(&cube.centroid().unwrap()) < 1e-12);

        let shifted = cube.translate(&[0.5, 0.5, 0.5]).unwrap();
        let c = shifted.centroid().unwrap();
        assert!(c.iter().all(|&x| (x - 0.5).abs() < 1e-12));

        let simplex = Polytope::from_vertices(
            3,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        let c = simplex.centroid().unwrap();
        assert!(c.iter().all(|&x| (x - 0.25).abs() < 1e-12));
        assert!((simplex.volume().unwrap() - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn surface_measures() {
        let m = Polytope::cube(3, 0.5).unwrap().surface_area_measure().unwrap();
        assert_eq!(m.atoms().len(), 6);
        for (u, w) in m.atoms() {
            assert!((w - 1.0).abs() < 1e-12);
            assert!((norm(u) - 1.0).abs() < 1e-12);
        }
        assert!(norm(&m.centroid()) < 1e-12);

        let m2 = Polytope::cube(3, 1.0).unwrap().surface_area_measure().unwrap();
        for (_, w) in m2.atoms() {
            assert!((w - 4.0).abs() < 1e-12);
        }

        let oct = Polytope::cross_polytope(3, 1.0).unwrap().surface_area_measure().unwrap();
        assert_eq!(oct.atoms().len(), 8);
        for (_, w) in oct.atoms() {
            assert!((w - 3.0f64.sqrt() / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn minkowski_sums() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        let origin = Polytope::from_vertices(3, vec![vec![0.0, 0.0, 0.0]]).unwrap();
        let same = cube.minkowski_sum(&origin).unwrap();
        assert!((same.volume().unwrap() - 1.0).abs() < 1e-12);

        let double = cube.minkowski_sum(&cube).unwrap();
        assert!((double.volume().unwrap() - 8.0).abs() < 1e-12);

        // Two segments sum to a square slab: degenerate, vertex-only.
        let s1 = Polytope::from_vertices(
            3,
            vec![vec![-1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]],
        )
        .unwrap();
        let s2 = Polytope::from_vertices(
            3,
            vec![vec![0.0, -1.0, 0.0], vec![0.0, 1.0, 0.0]],
        )
        .unwrap();
        let slab = s1.minkowski_sum(&s2).unwrap();
        assert!(!slab.is_full_dimensional());
        assert_eq!(slab.vertices().len(), 4);
        assert!(matches!(slab.volume(), Err(GeomError::NotFullDimensional)));
        // Support still splits additively.
        let x = [0.3, -0.7, 0.2];
        assert!((slab.support(&x) - (s1.support(&x) + s2.support(&x))).abs() < 1e-12);
    }

    #[test]
    fn linear_actions() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        let id = LinearMap::identity(3);
        let same = cube.apply_linear(&id).unwrap();
        assert!((same.volume().unwrap() - 1.0).abs() < 1e-12);

        let twice = cube.apply_linear(&LinearMap::scaling(3, 2.0).unwrap()).unwrap();
        assert!((twice.volume().unwrap() - 8.0).abs() < 1e-12);
        assert!((twice.support(&[1.0, 0.0, 0.0]) - 1.0).abs() < 1e-12);

        // Volume scales by |det phi|.
        let phi = LinearMap::new(vec![
            vec![2.0, 0.3, 0.0],
            vec![0.0, 1.0, -0.2],
            vec![0.1, 0.0, 1.5],
        ])
        .unwrap();
        let img = cube.apply_linear(&phi).unwrap();
        assert!(
            (img.volume().unwrap() - phi.det().abs() * 1.0).abs() < 1e-9,
            "vol {} det {}",
            img.volume().unwrap(),
            phi.det()
        );
    }

    #[test]
    fn halfspace_roundtrip() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        let normals: Vec<Vec<f64>> =
            cube.facets().iter().map(|f| f.normal.coords().to_vec()).collect();
        let offsets: Vec<f64> = cube.facets().iter().map(|f| f.offset).collect();
        let re = Polytope::from_halfspaces(3, normals, offsets).unwrap();
        assert!((re.volume().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(re.vertices().len(), 8);
        re.validate(1e-9).unwrap();
    }

    #[test]
    fn symmetry_flagging() {
        assert!(Polytope::cube(3, 0.5).unwrap().is_o_symmetric(1e-9));
        let simplex = Polytope::from_vertices(
            3,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        assert!(!simplex.is_o_symmetric(1e-9));
    }
}
