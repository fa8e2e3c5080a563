//! Support-function oracles: bodies represented only through `x -> h_K(x)`.
//! Lp addition and M-addition produce bodies that are not polytopes, so they
//! live here as oracles; sampled Hausdorff distance and outer polytope
//! approximation convert back to concrete geometry when needed.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use crate::body::Polytope;
use crate::error::{GeomError, Result};
use crate::hull;
use crate::linalg::{self, dot, norm, LinearMap};
use crate::math;

/// A convex body given by its support function.
#[derive(Clone)]
pub struct ConvexBodyOracle {
    dim: usize,
    h: Rc<dyn Fn(&[f64]) -> f64>,
}

impl ConvexBodyOracle {
    pub fn new(dim: usize, h: impl Fn(&[f64]) -> f64 + 'static) -> Self {
        ConvexBodyOracle { dim, h: Rc::new(h) }
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        let verts: Vec<Vec<f64>> = p.vertices().to_vec();
        ConvexBodyOracle::new(p.dim(), move |x| {
            verts.iter().map(|v| dot(x, v)).fold(f64::NEG_INFINITY, f64::max)
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self, x: &[f64]) -> f64 {
        (self.h)(x)
    }

    /// `h_{K+L} = h_K + h_L`.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        let (a, b) = (self.h.clone(), other.h.clone());
        Ok(ConvexBodyOracle::new(self.dim, move |x| a(x) + b(x)))
    }

    /// Firey sum: `h^p = h_K^p + h_L^p` for `p >= 1`; both bodies must
    /// contain the origin.
    pub fn lp_sum(&self, other: &Self, p: f64) -> Result<Self> {
        check_dims(self, other)?;
        if !(p >= 1.0) {
            return Err(GeomError::Invalid("lp sum needs p >= 1".into()));
        }
        self.check_contains_origin()?;
        other.check_contains_origin()?;
        let (a, b) = (self.h.clone(), other.h.clone());
        Ok(ConvexBodyOracle::new(self.dim, move |x| {
            let (ha, hb) = (a(x).max(0.0), b(x).max(0.0));
            math::powf(math::powf(ha, p) + math::powf(hb, p), 1.0 / p)
        }))
    }

    /// M-addition by a 1-unconditional planar body:
    /// `h(x) = h_M(h_K(x), h_L(x))`; both bodies must contain the origin.
    pub fn m_sum(&self, other: &Self, m: &UnconditionalBody2D) -> Result<Self> {
        check_dims(self, other)?;
        self.check_contains_origin()?;
        other.check_contains_origin()?;
        let (a, b) = (self.h.clone(), other.h.clone());
        let m = m.clone();
        Ok(ConvexBodyOracle::new(self.dim, move |x| {
            m.support(a(x).max(0.0), b(x).max(0.0))
        }))
    }

    pub fn scaled(&self, r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(GeomError::ZeroScale);
        }
        let a = self.h.clone();
        Ok(ConvexBodyOracle::new(self.dim, move |x| r * a(x)))
    }

    /// `h_{phi K}(x) = h_K(phi^t x)`.
    pub fn apply_linear(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: phi.dim() });
        }
        let a = self.h.clone();
        let m: Vec<Vec<f64>> = phi.matrix().to_vec();
        let n = self.dim;
        Ok(ConvexBodyOracle::new(n, move |x| {
            let y: Vec<f64> = (0..n).map(|j| (0..n).map(|i| m[i][j] * x[i]).sum()).collect();
            a(&y)
        }))
    }

    fn check_contains_origin(&self) -> Result<()> {
        for k in 0..self.dim {
            for s in [-1.0, 1.0] {
                let mut e = vec![0.0; self.dim];
                e[k] = s;
                let h = self.support(&e);
                if h < -1e-9 {
                    return Err(GeomError::OriginNotContained(h));
                }
            }
        }
        Ok(())
    }

    /// Outer polytope `{x : x . u <= h(u)}` over the sampled directions.
    pub fn outer_polytope(&self, depth: usize) -> Result<Polytope> {
        let dirs = sample_directions(self.dim, depth)?;
        let offsets: Vec<f64> = dirs.iter().map(|u| self.support(u)).collect();
        Polytope::from_halfspaces(self.dim, dirs, offsets)
    }
}

fn check_dims(a: &ConvexBodyOracle, b: &ConvexBodyOracle) -> Result<()> {
    if a.dim != b.dim {
        return Err(GeomError::DimensionMismatch { expected: a.dim, got: b.dim });
    }
    Ok(())
}

/// A planar convex body invariant under both coordinate reflections, used as
/// the parameter of M-addition. Held by its hull vertices.
#[derive(Debug, Clone)]
pub struct UnconditionalBody2D {
    vertices: Vec<Vec<f64>>,
}

impl UnconditionalBody2D {
    /// Hulls the points and verifies 1-unconditionality by checking that every
    /// sign flip of every vertex stays inside the hull.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let h = hull::convex_hull(&points, 2)?;
        let scale = h
            .vertices
            .iter()
            .map(|v| norm(v))
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let mut worst = 0.0f64;
        for v in &h.vertices {
            for flip in [[-1.0, 1.0], [1.0, -1.0], [-1.0, -1.0]] {
                let p = [flip[0] * v[0], flip[1] * v[1]];
                for f in &h.facets {
                    worst = worst.max(dot(&f.normal, &p) - f.offset);
                }
            }
        }
        if worst > 1e-9 * scale {
            return Err(GeomError::NotUnconditional(worst));
        }
        Ok(UnconditionalBody2D { vertices: h.vertices })
    }

    /// `[-1,1]^2`; M-addition with it is Minkowski addition.
    pub fn square() -> Self {
        UnconditionalBody2D::new(vec![
            vec![1.0, 1.0],
            vec![1.0, -1.0],
            vec![-1.0, 1.0],
            vec![-1.0, -1.0],
        ])
        .expect("square is unconditional")
    }

    /// `conv{±e1, ±e2}`; M-addition with it is the convex hull of the union.
    pub fn diamond() -> Self {
        UnconditionalBody2D::new(vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
        ])
        .expect("diamond is unconditional")
    }

    /// A polygonal approximation of the unit ball of `l_q` with `k` vertices
    /// per quadrant; with `1/p + 1/q = 1` this approximates Lp addition.
    pub fn lq_ball(q: f64, k: usize) -> Result<Self> {
        if !(q >= 1.0) || k == 0 {
            return Err(GeomError::Invalid("lq ball needs q >= 1, k >= 1".into()));
        }
        let mut pts = Vec::new();
        for i in 0..=k {
            let t = i as f64 / k as f64 * core::f64::consts::FRAC_PI_2;
            let (c, s) = (math::cos(t), math::sin(t));
            let r = math::powf(math::powf(c, q) + math::powf(s, q), -1.0 / q);
            for flip in [[1.0, 1.0], [-1.0, 1.0], [1.0, -1.0], [-1.0, -1.0]] {
                pts.push(vec![flip[0] * r * c, flip[1] * r * s]);
            }
        }
        UnconditionalBody2D::new(pts)
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn support(&self, s: f64, t: f64) -> f64 {
        self.vertices
            .iter()
            .map(|v| s * v[0] + t * v[1])
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Unit directions sampled quasi-uniformly: equally spaced angles in the
/// plane, subdivided icosahedron vertices on S^2.
pub fn sample_directions(dim: usize, depth: usize) -> Result<Vec<Vec<f64>>> {
    match dim {
        2 => {
            let m = 64usize << depth;
            Ok((0..m)
                .map(|i| {
                    let t = 2.0 * core::f64::consts::PI * i as f64 / m as f64;
                    vec![math::cos(t), math::sin(t)]
                })
                .collect())
        }
        3 => Ok(icosphere_directions(depth)),
        n => Err(GeomError::UnsupportedDimension(n)),
    }
}

/// Largest angular gap of the sample set: any direction is within this angle
/// of a sampled one.
pub fn sample_mesh_angle(dim: usize, depth: usize) -> Result<f64> {
    match dim {
        2 => Ok(core::f64::consts::PI / (64usize << depth) as f64),
        3 => {
            // Covering radius is at most the longest edge arc of the mesh.
            let faces = icosphere_faces(depth);
            let mut worst = 0.0f64;
            for f in &faces {
                for (a, b) in [(0, 1), (1, 2), (2, 0)] {
                    worst = worst.max(math::acos(dot(&f[a], &f[b])));
                }
            }
            Ok(worst)
        }
        n => Err(GeomError::UnsupportedDimension(n)),
    }
}

/// Vertices of the icosahedron subdivided `depth` times, projected to S^2.
pub fn icosphere_directions(depth: usize) -> Vec<Vec<f64>> {
    let faces = icosphere_faces(depth);
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for f in &faces {
        for v in f {
            if !dirs.iter().any(|u| linalg::dist(u, v) < 1e-9) {
                dirs.push(v.clone());
            }
        }
    }
    dirs
}

fn icosphere_faces(depth: usize) -> Vec<[Vec<f64>; 3]> {
    let t = (1.0 + math::sqrt(5.0)) / 2.0;
    let raw = [
        [-1.0, t, 0.0],
        [1.0, t, 0.0],
        [-1.0, -t, 0.0],
        [1.0, -t, 0.0],
        [0.0, -1.0, t],
        [0.0, 1.0, t],
        [0.0, -1.0, -t],
        [0.0, 1.0, -t],
        [t, 0.0, -1.0],
        [t, 0.0, 1.0],
        [-t, 0.0, -1.0],
        [-t, 0.0, 1.0],
    ];
    let verts: Vec<Vec<f64>> = raw
        .iter()
        .map(|v| linalg::normalize(v).expect("icosahedron vertex"))
        .collect();
    let idx = [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    let mut faces: Vec<[Vec<f64>; 3]> = idx
        .iter()
        .map(|&[a, b, c]| [verts[a].clone(), verts[b].clone(), verts[c].clone()])
        .collect();
    for _ in 0..depth {
        let mut next = Vec::with_capacity(4 * faces.len());
        for [a, b, c] in faces {
            let ab = midpoint_on_sphere(&a, &b);
            let bc = midpoint_on_sphere(&b, &c);
            let ca = midpoint_on_sphere(&c, &a);
            next.push([a.clone(), ab.clone(), ca.clone()]);
            next.push([b.clone(), bc.clone(), ab.clone()]);
            next.push([c.clone(), ca.clone(), bc.clone()]);
            next.push([ab, bc, ca]);
        }
        faces = next;
    }
    faces
}

fn midpoint_on_sphere(a: &[f64], b: &[f64]) -> Vec<f64> {
    linalg::normalize(&linalg::add(a, b)).expect("midpoint of non-antipodal unit vectors")
}

/// Result of a sampled Hausdorff distance: the sampled maximum of
/// `|h_K - h_L|` and a rigorous half-width for the unsampled remainder.
#[derive(Debug, Clone, Copy)]
pub struct HausdorffEstimate {
    pub value: f64,
    pub error_bound: f64,
}

/// `max_u |h_K(u) - h_L(u)|` over sampled unit directions. The true Hausdorff
/// distance lies in `[value, value + error_bound]`: both support functions are
/// `R`-Lipschitz in the angle, with `R` the larger circumradius.
pub fn hausdorff_distance(
    a: &ConvexBodyOracle,
    b: &ConvexBodyOracle,
    depth: usize,
) -> Result<HausdorffEstimate> {
    check_dims(a, b)?;
    let dirs = sample_directions(a.dim(), depth)?;
    let mut value = 0.0f64;
    let mut radius = 0.0f64;
    for u in &dirs {
        let (ha, hb) = (a.support(u), b.support(u));
        value = value.max(math::abs(ha - hb));
        radius = radius.max(math::abs(ha)).max(math::abs(hb));
    }
    let theta = sample_mesh_angle(a.dim(), depth)?;
    Ok(HausdorffEstimate { value, error_bound: 2.0 * radius * theta })
}

/// First mixed volume `V(K; L, n-1) = sum_i h_K(u_i) S_i(L)`: the body `K`
/// enters through its support function, the polytope `L` through its surface
/// area measure. `V(L; L, n-1) = n V(L)`.
pub fn mixed_volume_1(k: &ConvexBodyOracle, l: &Polytope) -> Result<f64> {
    if k.dim() != l.dim() {
        return Err(GeomError::DimensionMismatch { expected: k.dim(), got: l.dim() });
    }
    if !l.is_full_dimensional() {
        return Err(GeomError::NotFullDimensional);
    }
    Ok(l.facets()
        .iter()
        .map(|f| k.support(f.normal.coords()) * f.area)
        .sum::<f64>())
}
