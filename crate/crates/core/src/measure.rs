//! Discrete even-or-not measures on the unit sphere: finite atom lists
//! `(u_i, w_i)` with unit directions and positive weights. These carry surface
//! area measures, zonotope generating measures, and solver inputs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg::{self, dist, norm, LinearMap};
use crate::math;

/// Chordal distance below which two atom directions are treated as equal.
pub const ATOM_MERGE_TOL: f64 = 1e-9;

/// A finite positive measure on S^{n-1} given by its atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSphericalMeasure {
    dim: usize,
    atoms: Vec<(Vec<f64>, f64)>,
}

impl DiscreteSphericalMeasure {
    /// Normalizes directions, rejects non-positive weights, merges coincident
    /// directions, and sorts atoms into a canonical order.
    pub fn new(dim: usize, atoms: Vec<(Vec<f64>, f64)>) -> Result<Self> {
        let mut merged: Vec<(Vec<f64>, f64)> = Vec::with_capacity(atoms.len());
        for (u, w) in atoms {
            if u.len() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, got: u.len() });
            }
            if !(w > 0.0) {
                return Err(GeomError::NonPositiveWeight(w));
            }
            let u = linalg::normalize(&u)?;
            match merged.iter_mut().find(|(v, _)| dist(v, &u) < ATOM_MERGE_TOL) {
                Some((_, wv)) => *wv += w,
                None => merged.push((u, w)),
            }
        }
        merged.sort_by(|(a, _), (b, _)| {
            a.iter()
                .zip(b)
                .find_map(|(x, y)| x.partial_cmp(y).filter(|o| o.is_ne()))
                .unwrap_or(core::cmp::Ordering::Equal)
        });
        Ok(DiscreteSphericalMeasure { dim, atoms: merged })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[(Vec<f64>, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|(_, w)| w).sum()
    }

    /// `sum_i w_i u_i`; zero for surface area measures of bodies.
    pub fn centroid(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.dim];
        for (u, w) in &self.atoms {
            for (ci, ui) in c.iter_mut().zip(u) {
                *ci += w * ui;
            }
        }
        c
    }

    /// True when the measure assigns equal mass to antipodal directions.
    pub fn is_even(&self, tol: f64) -> bool {
        self.atoms.iter().all(|(u, w)| {
            let nu = linalg::scale(u, -1.0);
            self.atoms
                .iter()
                .any(|(v, wv)| dist(v, &nu) < ATOM_MERGE_TOL && math::abs(wv - w) < tol)
        })
    }

    /// `mu + nu`, merging shared directions.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Self::new(self.dim, atoms)
    }

    /// Multiplies every weight by `a > 0`.
    pub fn scale_weights(&self, a: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(GeomError::ZeroScale);
        }
        Ok(DiscreteSphericalMeasure {
            dim: self.dim,
            atoms: self.atoms.iter().map(|(u, w)| (u.clone(), a * w)).collect(),
        })
    }

    /// The even part `(mu + mu^-)/2` where `mu^-` reflects atoms through o.
    pub fn symmetrized(&self) -> Result<Self> {
        let mut atoms = Vec::with_capacity(2 * self.atoms.len());
        for (u, w) in &self.atoms {
            atoms.push((u.clone(), w / 2.0));
            atoms.push((linalg::scale(u, -1.0), w / 2.0));
        }
        Self::new(self.dim, atoms)
    }

    /// The surface area measure of `phi K` in terms of that of `K`: each atom
    /// `(u, w)` maps to `(phi^{-t}u / |phi^{-t}u|, w |det phi| |phi^{-t}u|)`.
    pub fn pushforward(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, got: phi.dim() });
        }
        let d = math::abs(phi.det());
        let atoms = self
            .atoms
            .iter()
            .map(|(u, w)| {
                let v = phi.apply_inv_transpose(u);
                let len = norm(&v);
                (v, w * d * len)
            })
            .collect();
        Self::new(self.dim, atoms)
    }

    /// Checks the Minkowski existence conditions: centroid at the origin and
    /// mass not concentrated on any great subsphere.
    pub fn validate_minkowski_data(&self, centroid_tol: f64) -> Result<()> {
        let c = norm(&self.centroid());
        if c > centroid_tol {
            return Err(GeomError::MeasureCentroidNonzero(c));
        }
        // Concentration on a great subsphere means the second moment matrix
        // sum w_i u_i u_i^t has a null direction.
        let n = self.dim;
        let mut m = vec![vec![0.0; n]; n];
        for (u, w) in &self.atoms {
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += w * u[i] * u[j];
                }
            }
        }
        let min_eig = min_eigenvalue_sym(&mut m);
        if min_eig < 1e-10 * self.total_mass().max(1e-300) {
            return Err(GeomError::MeasureDegenerate);
        }
        Ok(())
    }

    /// Largest chordal move needed to carry each atom of `self` to the nearest
    /// atom of `other`, plus weight mismatch; a quick alignment diagnostic,
    /// not a metric.
    pub fn alignment_residual(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for (u, w) in &self.atoms {
            let (d, wv) = other
                .atoms
                .iter()
                .map(|(v, wv)| (dist(u, v), *wv))
                .fold((f64::INFINITY, 0.0), |acc, x| if x.0 < acc.0 { x } else { acc });
            worst = worst.max(d).max(math::abs(w - wv));
        }
        worst
    }
}

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
/// Consumes `m` as scratch.
pub(crate) fn min_eigenvalue_sym(m: &mut [Vec<f64>]) -> f64 {
    let n = m.len();
    for _sweep in 0..50 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m[i][j] * m[i][j];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if math::abs(m[p][q]) < 1e-30 {
                    continue;
                }
                let theta = 0.5 * math::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
                let (c, s) = (math::cos(theta), math::sin(theta));
                for k in 0..n {
                    let (a, b) = (m[p][k], m[q][k]);
                    m[p][k] = c * a - s * b;
                    m[q][k] = s * a + c * b;
                }
                for k in 0..n {
                    let (a, b) = (m[k][p], m[k][q]);
                    m[k][p] = c * a - s * b;
                    m[k][q] = s * a + c * b;
                }
            }
        }
    }
    (0..n).map(|i| m[i][i]).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_measure() -> DiscreteSphericalMeasure {
        // Surface area measure of the unit cube [-1/2,1/2]^3.
        let mut atoms = Vec::new();
        for k in 0..3 {
            for s in [-1.0, 1.0] {
                let mut u = vec![0.0; 3];
                u[k] = s;
                atoms.push((u, 1.0));
            }
        }
        DiscreteSphericalMeasure::new(3, atoms).unwrap()
    }

    #[test]
    fn merge_and_sort() {
        let m = DiscreteSphericalMeasure::new(
            3,
            vec![
                (vec![2.0, 0.0, 0.0], 1.5),
                (vec![1.0, 1e-12, 0.0], 0.5),
                (vec![0.0, 1.0, 0.0], 1.0),
            ],
        )
        .unwrap();
        assert_eq!(m.atoms().len(), 2);
        assert!((m.total_mass() - 3.0).abs() < 1e-12);
        // Canonical order is lexicographic: e2 before e1.
        assert!((m.atoms()[0].0[1] - 1.0).abs() < 1e-12);
        assert!((m.atoms()[1].1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_atoms() {
        assert!(matches!(
            DiscreteSphericalMeasure::new(3, vec![(vec![1.0, 0.0, 0.0], 0.0)]),
            Err(GeomError::NonPositiveWeight(_))
        ));
        assert!(DiscreteSphericalMeasure::new(3, vec![(vec![0.0, 0.0, 0.0], 1.0)]).is_err());
    }

    #[test]
    fn cube_measure_is_valid_even_data() {
        let m = cube_measure();
        assert!((m.total_mass() - 6.0).abs() < 1e-12);
        assert!(norm(&m.centroid()) < 1e-12);
        assert!(m.is_even(1e-12));
        m.validate_minkowski_data(1e-8).unwrap();
    }

    #[test]
    fn degenerate_data_rejected() {
        // Centroid off origin.
        let m = DiscreteSphericalMeasure::new(
            3,
            vec![
                (vec![1.0, 0.0, 0.0], 2.0),
                (vec![-1.0, 0.0, 0.0], 1.0),
                (vec![0.0, 1.0, 0.0], 1.0),
                (vec![0.0, -1.0, 0.0], 1.0),
                (vec![0.0, 0.0, 1.0], 1.0),
                (vec![0.0, 0.0, -1.0], 1.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            m.validate_minkowski_data(1e-8),
            Err(GeomError::MeasureCentroidNonzero(_))
        ));

        // All mass on the equator z = 0.
        let m = DiscreteSphericalMeasure::new(
            3,
            vec![
                (vec![1.0, 0.0, 0.0], 1.0),
                (vec![-1.0, 0.0, 0.0], 1.0),
                (vec![0.0, 1.0, 0.0], 1.0),
                (vec![0.0, -1.0, 0.0], 1.0),
            ],
        )
        .unwrap();
        assert!(matches!(m.validate_minkowski_data(1e-8), Err(GeomError::MeasureDegenerate)));
    }

    #[test]
    fn addition_merges_shared_directions() {
        let a = cube_measure();
        let b = cube_measure();
        let s = a.add(&b).unwrap();
        assert_eq!(s.atoms().len(), 6);
        assert!((s.total_mass() - 12.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrization() {
        let m = DiscreteSphericalMeasure::new(
            3,
            vec![(vec![1.0, 0.0, 0.0], 2.0), (vec![0.0, 1.0, 0.0], 4.0)],
        )
        .unwrap();
        let s = m.symmetrized().unwrap();
        assert!(s.is_even(1e-12));
        assert!((s.total_mass() - 6.0).abs() < 1e-12);
        assert_eq!(s.atoms().len(), 4);
    }

    #[test]
    fn pushforward_matches_image_box() {
        // phi = diag(2,1,1) sends the cube [-1/2,1/2]^3 to [-1,1]x[-1/2,1/2]^2,
        // whose facet areas are 1 (x-facets) and 2 (y-, z-facets).
        let m = cube_measure();
        let phi = LinearMap::diagonal(&[2.0, 1.0, 1.0]).unwrap();
        let p = m.pushforward(&phi).unwrap();
        assert_eq!(p.atoms().len(), 6);
        for (u, w) in p.atoms() {
            let expect = if u[0].abs() > 0.5 { 1.0 } else { 2.0 };
            assert!((w - expect).abs() < 1e-12, "dir {u:?} weight {w}");
        }
        p.validate_minkowski_data(1e-8).unwrap();
    }

    #[test]
    fn jacobi_eigenvalues() {
        let mut m = vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 0.0],
            vec![0.0, 0.0, 5.0],
        ];
        // Eigenvalues 1, 3, 5.
        assert!((min_eigenvalue_sym(&mut m) - 1.0).abs() < 1e-9);
    }
}
