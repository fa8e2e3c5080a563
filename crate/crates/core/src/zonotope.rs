//! Zonotopes `Z = sum_i [-v_i, v_i]` and the projection body operator.
//! The projection body of a polytope is always a zonotope, with generating
//! measure read off the surface area measure; the inverse operator goes back
//! through the Minkowski-problem solver.

use alloc::vec::Vec;

use crate::body::Polytope;
use crate::error::{GeomError, Result};
use crate::linalg::{self, dot, norm, LinearMap};
use crate::math;
use crate::measure::{DiscreteSphericalMeasure, ATOM_MERGE_TOL};
use crate::solver::{solve_minkowski, SolverConfig};

/// A centrally symmetric zonotope, stored by its generators: the Minkowski
/// sum of the segments `[-v_i, v_i]`, centered at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Zonotope {
    dim: usize,
    generators: Vec<Vec<f64>>,
}

impl Zonotope {
    /// Drops zero generators and merges parallel ones (the segments
    /// `[-v, v]` and `[-w, w]` with `w` parallel to `v` sum to one segment).
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Result<Self> {
        let mut gens: Vec<Vec<f64>> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, got: g.len() });
            }
            let len = norm(&g);
            if len < 1e-14 {
                continue;
            }
            let mut u = linalg::scale(&g, 1.0 / len);
            // Sign-normalize so v and -v merge.
            if u.iter().find(|&&x| math::abs(x) > 1e-12).is_some_and(|&x| x < 0.0) {
                u = linalg::scale(&u, -1.0);
            }
            match gens
                .iter_mut()
                .find(|v| linalg::dist(&linalg::normalize(v).unwrap(), &u) < ATOM_MERGE_TOL)
            {
                Some(v) => {
                    let combined = norm(v) + len;
                    *v = linalg::scale(&u, combined);
                }
                None => gens.push(linalg::scale(&u, len)),
            }
        }
        Ok(Zonotope { dim, generators: gens })
    }

    /// The zonotope whose generating measure is the given even measure: each
    /// antipodal atom pair `(±u, w)` contributes the generator `w u`.
    pub fn from_generating_measure(mu: &DiscreteSphericalMeasure) -> Result<Self> {
        if !mu.is_even(1e-9) {
            return Err(GeomError::Invalid("generating measure must be even".into()));
        }
        let gens = mu
            .atoms()
            .iter()
            .map(|(u, w)| linalg::scale(u, w / 2.0))
            .collect();
        Self::new(mu.dim(), gens)
    }

    /// `Pi K`: the projection body of a full-dimensional polytope,
    /// `h_{Pi K}(u) = (1/2) sum_i |u . u_i| S_i(K)`, so the atoms of
    /// `S(K, .)` become the generators `(w_i / 2) u_i`.
    pub fn projection_body(k: &Polytope) -> Result<Self> {
        let mu = k.surface_area_measure()?;
        let gens = mu
            .atoms()
            .iter()
            .map(|(u, w)| linalg::scale(u, w / 2.0))
            .collect();
        Self::new(k.dim(), gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    /// `h_Z(x) = sum_i |x . v_i|`.
    pub fn support(&self, x: &[f64]) -> f64 {
        self.generators.iter().map(|v| math::abs(dot(x, v))).sum()
    }

    /// The even measure with atoms `(±v/|v|, |v|)`; for `Z = Pi K` with `K`
    /// o-symmetric this is exactly `S(K, .)`.
    pub fn generating_measure(&self) -> Result<DiscreteSphericalMeasure> {
        let mut atoms = Vec::with_capacity(2 * self.generators.len());
        for v in &self.generators {
            let len = norm(v);
            atoms.push((v.clone(), len));
            atoms.push((linalg::scale(v, -1.0), len));
        }
        DiscreteSphericalMeasure::new(self.dim, atoms)
    }

    pub fn scaled(&self, r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(GeomError::ZeroScale);
        }
        Self::new(
            self.dim,
            self.generators.iter().map(|v| linalg::scale(v, r)).collect(),
        )
    }

    /// `phi Z`: maps each generator.
    pub fn apply_linear(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: phi.dim() });
        }
        Self::new(self.dim, self.generators.iter().map(|v| phi.apply(v)).collect())
    }

    /// Expands the generators into an explicit vertex polytope. The vertex
    /// cloud has `2^m` sign patterns, so this is restricted to few generators.
    pub fn to_polytope(&self) -> Result<Polytope> {
        let m = self.generators.len();
        if m > 16 {
            return Err(GeomError::Invalid("too many generators to expand".into()));
        }
        let mut pts = Vec::with_capacity(1 << m);
        for mask in 0u32..(1 << m) {
            let mut p = alloc::vec![0.0; self.dim];
            for (i, v) in self.generators.iter().enumerate() {
                let s = if mask >> i & 1 == 1 { 1.0 } else { -1.0 };
                for (pj, vj) in p.iter_mut().zip(v) {
                    *pj += s * vj;
                }
            }
            pts.push(p);
        }
        Polytope::from_vertices(self.dim, pts)
    }

    /// `Pi^{-1} Z`: the o-symmetric body whose projection body is `Z`,
    /// recovered by solving the Minkowski problem for the generating measure.
    /// The solver output is symmetric only up to its tolerance, so support
    /// numbers of antipodal facet pairs are averaged before rebuilding.
    pub fn inverse_projection_body(&self, config: &SolverConfig) -> Result<Polytope> {
        let mu = self.generating_measure()?;
        mu.validate_minkowski_data(1e-8)?;
        let raw = solve_minkowski(&mu, config)?;
        let facets = raw.facets();
        let mut normals = Vec::with_capacity(facets.len());
        let mut offsets = Vec::with_capacity(facets.len());
        for f in facets {
            let u = f.normal.coords().to_vec();
            let nu = linalg::scale(&u, -1.0);
            let opposite = facets
                .iter()
                .find(|g| linalg::dist(g.normal.coords(), &nu) < 1e-9)
                .map_or(f.offset, |g| g.offset);
            normals.push(u);
            offsets.push((f.offset + opposite) / 2.0);
        }
        Polytope::from_halfspaces(self.dim, normals, offsets)
    }
}
