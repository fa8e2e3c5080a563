//! Constructive solution of the discrete Minkowski problem: given atoms
//! `(u_i, w_i)` with centroid zero and full spread, find the polytope whose
//! facet normals are the `u_i` and whose facet areas are the `w_i`. Blaschke
//! addition and the inverse projection body are thin layers over this.

use alloc::vec;
use alloc::vec::Vec;

use crate::body::Polytope;
use crate::error::{GeomError, Result};
use crate::hrep::{self, FacetGeom};
use crate::linalg::{dot, solve_dense};
use crate::math;
use crate::measure::DiscreteSphericalMeasure;

/// Knobs for the damped Newton iteration.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Relative tolerance on the worst facet-area defect.
    pub area_tolerance: f64,
    pub max_iterations: usize,
    /// Backtracking factor for the line search.
    pub line_search_shrink: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            area_tolerance: 1e-9,
            max_iterations: 200,
            line_search_shrink: 0.5,
        }
    }
}

/// `mu + nu` as Minkowski-problem data; the sum of valid data is valid.
pub fn add_measures(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
) -> Result<DiscreteSphericalMeasure> {
    a.add(b)
}

struct Evaluation {
    geom: Vec<FacetGeom>,
    areas: Vec<f64>,
    /// Worst single-facet defect, relative (convergence criterion).
    residual: f64,
    /// Root-sum-square defect, relative (line-search merit: smooth).
    merit: f64,
}

fn evaluate(dirs: &[Vec<f64>], h: &[f64], weights: &[f64], wmax: f64) -> Option<Evaluation> {
    let geom = hrep::facet_geometry(dirs, h, dirs[0].len()).ok()?;
    let areas: Vec<f64> = geom.iter().map(|g| g.area).collect();
    let residual = areas
        .iter()
        .zip(weights)
        .map(|(a, w)| math::abs(a - w))
        .fold(0.0f64, f64::max)
        / wmax;
    let merit = math::sqrt(
        areas
            .iter()
            .zip(weights)
            .map(|(a, w)| (a - w) * (a - w))
            .sum::<f64>(),
    ) / wmax;
    Some(Evaluation { geom, areas, residual, merit })
}

/// Pulls the plane of every absent facet inward until it cuts the body.
fn repair_empty_facets(dirs: &[Vec<f64>], h: &mut [f64], geom: &[FacetGeom]) -> bool {
    let verts = hrep::collect_vertices(geom);
    if verts.is_empty() {
        return false;
    }
    let mut changed = false;
    for (i, g) in geom.iter().enumerate() {
        if !g.verts.is_empty() {
            continue;
        }
        let support = verts
            .iter()
            .map(|v| dot(&dirs[i], v))
            .fold(f64::NEG_INFINITY, f64::max);
        let target = if support > 0.0 { 0.999 * support } else { 1.001 * support };
        if target < h[i] {
            h[i] = target;
            changed = true;
        }
    }
    changed
}

/// The Newton direction with the translation kernel pinned: the Jacobian
/// `dA_i/dh_j` is singular along `h_i -> h_i + t . u_i`, so the step is taken
/// in the orthogonal complement via Lagrange multipliers.
fn newton_step(
    dirs: &[Vec<f64>],
    weights: &[f64],
    eval: &Evaluation,
    damping: f64,
) -> Result<Vec<f64>> {
    let n = dirs[0].len();
    let m = dirs.len();
    let size = m + n;
    let mut kkt = vec![vec![0.0; size]; size];
    let mut rhs = vec![0.0; size];
    for i in 0..m {
        // dA_i/dh_j = l_ij / sin(theta_ij) for adjacent facets, and the
        // diagonal balances so rigid translations are in the kernel.
        for &(j, shared) in &eval.geom[i].neighbors {
            let c = dot(&dirs[i], &dirs[j]).clamp(-1.0, 1.0);
            let s = math::sqrt((1.0 - c * c).max(1e-24));
            kkt[i][j] += shared / s;
            kkt[i][i] -= c * shared / s;
        }
        rhs[i] = weights[i] - eval.areas[i];
        for k in 0..n {
            kkt[i][m + k] = dirs[i][k];
            kkt[m + k][i] = dirs[i][k];
        }
    }
    // Damping keeps the KKT matrix invertible when a facet has vanished and
    // its row is zero, and tames the step when the geometry is nearly
    // degenerate; it is escalated by the caller when a step is rejected.
    for (i, r) in kkt.iter_mut().take(m).enumerate() {
        r[i] -= damping;
    }
    let sol = solve_dense(kkt, rhs)?;
    Ok(sol[..m].to_vec())
}

/// Solves the Minkowski problem for the given atoms and returns the unique
/// solution translated so its centroid is at the origin. The facet areas of
/// the result match the weights to the configured relative tolerance, with
/// the total surface area matched exactly by a final uniform rescale.
pub fn solve_minkowski(
    mu: &DiscreteSphericalMeasure,
    config: &SolverConfig,
) -> Result<Polytope> {
    mu.validate_minkowski_data(1e-8)?;
    let dim = mu.dim();
    if !(2..=3).contains(&dim) {
        return Err(GeomError::UnsupportedDimension(dim));
    }
    let m = mu.atoms().len();
    if m < dim + 1 {
        return Err(GeomError::MeasureDegenerate);
    }
    let dirs: Vec<Vec<f64>> = mu.atoms().iter().map(|(u, _)| u.clone()).collect();
    let weights: Vec<f64> = mu.atoms().iter().map(|(_, w)| *w).collect();
    let wmax = weights.iter().fold(0.0f64, |a, &b| a.max(b));

    // Scale-free start: the unit support vector, dilated so the total area is
    // already in the right ballpark.
    let mut h = vec![1.0; m];
    if let Some(e0) = evaluate(&dirs, &h, &weights, wmax) {
        let total: f64 = e0.areas.iter().sum();
        if total > 1e-12 {
            let s = math::powf(mu.total_mass() / total, 1.0 / (dim as f64 - 1.0));
            h.iter_mut().for_each(|x| *x *= s);
        }
    }

    let mut eval = evaluate(&dirs, &h, &weights, wmax)
        .ok_or(GeomError::SolverStalled { iterations: 0, residual: f64::INFINITY })?;
    let mut iterations = 0usize;
    let mut damping = 1e-12f64;
    while eval.residual > config.area_tolerance {
        if iterations >= config.max_iterations {
            return Err(GeomError::SolverStalled { iterations, residual: eval.residual });
        }
        iterations += 1;

        // Facets that vanished have no adjacency and leave Newton blind to
        // them; move their planes back onto the body first.
        let mut repaired = false;
        for _ in 0..10 {
            if !repair_empty_facets(&dirs, &mut h, &eval.geom) {
                break;
            }
            repaired = true;
            eval = evaluate(&dirs, &h, &weights, wmax)
                .ok_or(GeomError::SolverStalled { iterations, residual: f64::INFINITY })?;
        }
        if repaired && eval.residual <= config.area_tolerance {
            break;
        }

        // Damped Newton with escalation: when a backtracking search along
        // the step cannot reduce the merit (ill-conditioned geometry, e.g.
        // near-parallel facet pairs), increase the damping and retry.
        let mut accepted = false;
        for _ in 0..8 {
            let delta = newton_step(&dirs, &weights, &eval, damping)?;
            let mut t = 1.0f64;
            for _ in 0..40 {
                let trial: Vec<f64> = h.iter().zip(&delta).map(|(x, d)| x + t * d).collect();
                if let Some(e) = evaluate(&dirs, &trial, &weights, wmax) {
                    // A state with (near) no surface at all can have a small
                    // merit, but it is a dead end: the body has collapsed and
                    // every Jacobian row is zero. Never step into it.
                    let alive = e.areas.iter().sum::<f64>() > 1e-6 * mu.total_mass();
                    if alive && e.merit < eval.merit * (1.0 - 1e-4 * t) {
                        h = trial;
                        eval = e;
                        accepted = true;
                        break;
                    }
                }
                t *= config.line_search_shrink;
            }
            if accepted {
                damping = (damping / 10.0).max(1e-12);
                break;
            }
            damping *= 100.0;
        }
        if !accepted {
            return Err(GeomError::SolverStalled { iterations, residual: eval.residual });
        }
    }

    // Uniform rescale pins the total surface area exactly.
    let total: f64 = eval.areas.iter().sum();
    let s = math::powf(mu.total_mass() / total, 1.0 / (dim as f64 - 1.0));
    let h: Vec<f64> = h.iter().map(|x| x * s).collect();
    let geom = hrep::facet_geometry(&dirs, &h, dim)?;
    let body = Polytope::from_facet_geometry(dim, &dirs, &h, &geom)?;
    body.recentered()
}

/// `K # L`: the body whose surface area measure is `S(K,.) + S(L,.)`,
/// centered at the origin.
pub fn blaschke_sum(k: &Polytope, l: &Polytope, config: &SolverConfig) -> Result<Polytope> {
    if k.dim() != l.dim() {
        return Err(GeomError::DimensionMismatch { expected: k.dim(), got: l.dim() });
    }
    let mu = add_measures(&k.surface_area_measure()?, &l.surface_area_measure()?)?;
    solve_minkowski(&mu, config)
}

/// Blaschke scalar multiplication: the body with surface area measure
/// `c S(K, .)` is the dilate by `c^{1/(n-1)}`, centered at the origin.
pub fn scale_body(k: &Polytope, c: f64) -> Result<Polytope> {
    if !(c > 0.0) {
        return Err(GeomError::ZeroScale);
    }
    let r = math::powf(c, 1.0 / (k.dim() as f64 - 1.0));
    k.scaled(r)?.recentered()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{norm, LinearMap};

    fn assert_measures_close(k: &Polytope, mu: &DiscreteSphericalMeasure, tol: f64) {
        let got = k.surface_area_measure().unwrap();
        assert_eq!(got.atoms().len(), mu.atoms().len());
        assert!(got.alignment_residual(mu) < tol, "residual {}", got.alignment_residual(mu));
    }

    #[test]
    fn recovers_cube() {
        let mu = Polytope::cube(3, 0.5).unwrap().surface_area_measure().unwrap();
        let k = solve_minkowski(&mu, &SolverConfig::default()).unwrap();
        assert!((k.volume().unwrap() - 1.0).abs() < 1e-8);
        assert!(norm(&k.centroid().unwrap()) < 1e-9);
        assert!((k.support(&[1.0, 0.0, 0.0]) - 0.5).abs() < 1e-8);
        assert_measures_close(&k, &mu, 1e-8);
    }

    #[test]
    fn recovers_octahedron() {
        let mu = Polytope::cross_polytope(3, 1.0)
            .unwrap()
            .surface_area_measure()
            .unwrap();
        let k = solve_minkowski(&mu, &SolverConfig::default()).unwrap();
        assert!((k.volume().unwrap() - 4.0 / 3.0).abs() < 1e-8);
        assert_measures_close(&k, &mu, 1e-8);
    }

    #[test]
    fn recovers_simplex_up_to_translation() {
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
        let mu = simplex.surface_area_measure().unwrap();
        let k = solve_minkowski(&mu, &SolverConfig::default()).unwrap();
        assert!((k.volume().unwrap() - 1.0 / 6.0).abs() < 1e-8);
        assert!(norm(&k.centroid().unwrap()) < 1e-9);
        assert_measures_close(&k, &mu, 1e-7);
    }

    #[test]
    fn recovers_rotated_box() {
        let rot = LinearMap::rotation_xy(3, 0.6);
        let b = Polytope::boxed(&[0.4, 0.8, 1.2]).unwrap().apply_linear(&rot).unwrap();
        let mu = b.surface_area_measure().unwrap();
        let k = solve_minkowski(&mu, &SolverConfig::default()).unwrap();
        assert!((k.volume().unwrap() - b.volume().unwrap()).abs() < 1e-8);
        assert_measures_close(&k, &mu, 1e-7);
    }

    #[test]
    fn cube_blaschke_square() {
        // S(K # K) = 2 S(K): for the unit cube this is the cube of side
        // sqrt(2), volume 2 sqrt(2).
        let cube = Polytope::cube(3, 0.5).unwrap();
        let s = blaschke_sum(&cube, &cube, &SolverConfig::default()).unwrap();
        assert!((s.volume().unwrap() - 2.0f64.sqrt().powi(3)).abs() < 1e-7);
        assert!((s.support(&[1.0, 0.0, 0.0]) - 2.0f64.sqrt() / 2.0).abs() < 1e-8);
    }

    #[test]
    fn blaschke_sum_of_cube_and_octahedron() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        let oct = Polytope::cross_polytope(3, 1.0).unwrap();
        let s = blaschke_sum(&cube, &oct, &SolverConfig::default()).unwrap();
        let mu = s.surface_area_measure().unwrap();
        assert_eq!(mu.atoms().len(), 14);
        let target = add_measures(
            &cube.surface_area_measure().unwrap(),
            &oct.surface_area_measure().unwrap(),
        )
        .unwrap();
        assert!(mu.alignment_residual(&target) < 1e-7);
        // Kneser-Suss direction: V(K # L)^{(n-1)/n} >= V(K)^{(n-1)/n} + V(L)^{(n-1)/n}.
        let p = 2.0 / 3.0;
        let lhs = s.volume().unwrap().powf(p);
        let rhs = cube.volume().unwrap().powf(p) + oct.volume().unwrap().powf(p);
        assert!(lhs >= rhs - 1e-9, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn blaschke_scaling() {
        let cube = Polytope::cube(3, 0.5).unwrap();
        let k = scale_body(&cube, 4.0).unwrap();
        let mu = k.surface_area_measure().unwrap();
        for (_, w) in mu.atoms() {
            assert!((w - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_data() {
        let lopsided = DiscreteSphericalMeasure::new(
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
        assert!(solve_minkowski(&lopsided, &SolverConfig::default()).is_err());
    }

    #[test]
    fn two_dimensional_problem() {
        // In the plane the solution rebuilds the square from its edge data.
        let mu = DiscreteSphericalMeasure::new(
            2,
            vec![
                (vec![1.0, 0.0], 2.0),
                (vec![-1.0, 0.0], 2.0),
                (vec![0.0, 1.0], 2.0),
                (vec![0.0, -1.0], 2.0),
            ],
        )
        .unwrap();
        let k = solve_minkowski(&mu, &SolverConfig::default()).unwrap();
        assert!((k.volume().unwrap() - 4.0).abs() < 1e-8);
        assert!((k.support(&[1.0, 0.0]) - 1.0).abs() < 1e-8);
    }
}
