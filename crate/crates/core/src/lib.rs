//! Convex-body arithmetic at desk scale.
//!
//! The crate provides concrete polytopes and zonotopes in low dimension
//! together with the operations that connect them: support functions,
//! Minkowski / Lp / M-addition, surface area measures, the projection body
//! operator and its inverse, a constructive Minkowski-problem solver that
//! realizes Blaschke addition, and exact Levy-Prokhorov distances between
//! discrete spherical measures.
//!
//! The `verify` module packages the identities, bounds, and counterexamples
//! that tie these pieces together into named, seeded checks.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `blaschke-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod body;
pub mod error;
pub mod lpmetric;
pub mod measure;
pub mod oracle;
pub mod solver;
pub mod verify;
pub mod zonotope;

mod hrep;
mod hull;
pub mod linalg;
pub(crate) mod math;

pub use body::{Direction, Facet, Polytope};
pub use error::GeomError;
pub use linalg::LinearMap;
pub use lpmetric::{delta_bar_lp, delta_lp, lp_distance, lp_feasible, LpDistanceResult};
pub use measure::DiscreteSphericalMeasure;
pub use oracle::{ConvexBodyOracle, UnconditionalBody2D};
pub use solver::{add_measures, blaschke_sum, scale_body, solve_minkowski, SolverConfig};
pub use verify::CheckReport;
pub use zonotope::Zonotope;

/// Volume of the unit ball in dimension `n`.
pub fn unit_ball_volume(n: usize) -> f64 {
    // kappa_n = pi^(n/2) / Gamma(n/2 + 1), via the two-step recurrence
    // kappa_n = 2 pi / n * kappa_{n-2}.
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => 2.0 * core::f64::consts::PI / (n as f64) * unit_ball_volume(n - 2),
    }
}
