//! Levy-Prokhorov distance between discrete spherical measures, computed
//! exactly: the one-sided condition `mu(A) <= nu(A_eps) + eps` over all atom
//! subsets `A` reduces by max-flow duality to a single bipartite flow value,
//! and the infimum over `eps` is found by bisection.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::body::Polytope;
use crate::error::{GeomError, Result};
use crate::linalg::dist;
use crate::measure::DiscreteSphericalMeasure;
use crate::zonotope::Zonotope;

/// Weights are scaled to integers at this resolution so the flow is exact.
const MASS_SCALE: f64 = 1e12;

/// An `eps` known to satisfy both one-sided conditions, together with the
/// bisection gap: the true distance lies in `[value - tolerance, value]`.
#[derive(Debug, Clone, Copy)]
pub struct LpDistanceResult {
    pub value: f64,
    pub certificate_eps: f64,
    pub bisection_tolerance: f64,
}

fn check_pair(a: &DiscreteSphericalMeasure, b: &DiscreteSphericalMeasure) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    Ok(())
}

/// Max flow by Edmonds-Karp on a dense residual matrix; node counts here are
/// a few hundred at most.
fn max_flow(cap: &mut [Vec<i128>], s: usize, t: usize) -> i128 {
    let n = cap.len();
    let mut flow = 0i128;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut q = VecDeque::new();
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    q.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut bottleneck = i128::MAX;
        let mut v = t;
        while v != s {
            let u = prev[v];
            bottleneck = bottleneck.min(cap[u][v]);
            v = u;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck;
    }
}

/// `max_A [mu(A) - nu(A_eps)]` where `A_eps` is the open chordal
/// eps-neighborhood, as an exact integer-scaled mass.
fn one_sided_deficiency(
    mu: &DiscreteSphericalMeasure,
    nu: &DiscreteSphericalMeasure,
    eps: f64,
) -> f64 {
    let na = mu.atoms().len();
    let nb = nu.atoms().len();
    let n = na + nb + 2;
    let (s, t) = (0, n - 1);
    let mut cap = vec![vec![0i128; n]; n];
    let mut total = 0i128;
    for (i, (_, w)) in mu.atoms().iter().enumerate() {
        let c = (w * MASS_SCALE) as i128;
        cap[s][1 + i] = c;
        total += c;
    }
    for (j, (_, w)) in nu.atoms().iter().enumerate() {
        cap[1 + na + j][t] = (w * MASS_SCALE) as i128;
    }
    // Strict neighborhood: the receiving atom must be closer than eps.
    for (i, (u, _)) in mu.atoms().iter().enumerate() {
        for (j, (v, _)) in nu.atoms().iter().enumerate() {
            if dist(u, v) < eps - 1e-15 {
                cap[1 + i][1 + na + j] = i128::MAX / 4;
            }
        }
    }
    let flow = max_flow(&mut cap, s, t);
    (total - flow) as f64 / MASS_SCALE
}

/// Whether `eps` satisfies `mu(A) <= nu(A_eps) + eps` for every Borel `A`
/// and symmetrically. Exact up to the integer mass resolution.
pub fn lp_feasible(
    mu: &DiscreteSphericalMeasure,
    nu: &DiscreteSphericalMeasure,
    eps: f64,
) -> Result<bool> {
    check_pair(mu, nu)?;
    if !(eps > 0.0) {
        return Err(GeomError::Invalid("eps must be positive".into()));
    }
    let slack = eps * MASS_SCALE + 1.0;
    Ok(one_sided_deficiency(mu, nu, eps) * MASS_SCALE <= slack
        && one_sided_deficiency(nu, mu, eps) * MASS_SCALE <= slack)
}

/// The Levy-Prokhorov distance, bracketed by bisection to `tol`.
pub fn lp_distance(
    mu: &DiscreteSphericalMeasure,
    nu: &DiscreteSphericalMeasure,
    tol: f64,
) -> Result<LpDistanceResult> {
    check_pair(mu, nu)?;
    if !(tol > 0.0) {
        return Err(GeomError::Invalid("bisection tolerance must be positive".into()));
    }
    let mut lo = 0.0f64;
    // Any eps beyond the chordal diameter plus the total-mass gap is feasible.
    let mut hi = 2.0 + (mu.total_mass() - nu.total_mass()).abs() + tol;
    debug_assert!(lp_feasible(mu, nu, hi)?);
    while hi - lo > tol {
        let mid = (lo + hi) / 2.0;
        if lp_feasible(mu, nu, mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(LpDistanceResult { value: hi, certificate_eps: hi, bisection_tolerance: tol })
}

/// `delta_LP(K, L)`: the Levy-Prokhorov distance between the surface area
/// measures. These are translation invariant, so no recentering is needed.
pub fn delta_lp(k: &Polytope, l: &Polytope) -> Result<f64> {
    let a = k.surface_area_measure()?;
    let b = l.surface_area_measure()?;
    Ok(lp_distance(&a, &b, 1e-9)?.value)
}

/// The corresponding distance between zonotopes, taken on their generating
/// measures.
pub fn delta_bar_lp(a: &Zonotope, b: &Zonotope) -> Result<f64> {
    let ma = a.generating_measure()?;
    let mb = b.generating_measure()?;
    Ok(lp_distance(&ma, &mb, 1e-9)?.value)
}
