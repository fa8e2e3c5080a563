//! Command-line front end for convex-body arithmetic: construct bodies,
//! compute Minkowski / Blaschke / Lp / M sums, projection bodies and their
//! inverses, Hausdorff and Levy-Prokhorov distances, surface area measures,
//! the verification suite, and JSON / OFF export.
//!
//! Exit codes: 0 success, 1 check failure (`verify`), 2 parse or validation
//! error, 3 solver stall.

mod io;

use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};

use blaschke::oracle::hausdorff_distance;
use blaschke::verify::run_all;
use blaschke::{
    blaschke_sum, lp_distance, ConvexBodyOracle, GeomError, LinearMap, Polytope, SolverConfig,
    UnconditionalBody2D, Zonotope,
};

use io::{Body, CliError};

#[derive(Parser)]
#[command(
    name = "blaschke",
    version,
    about = "Convex-body arithmetic: sums, projection bodies, metrics, verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Off,
}

/// Arguments shared by every verb that takes a single body: either a file
/// path or one of the built-in constructors.
#[derive(clap::Args)]
struct BodyInput {
    /// Body file (JSON); omit when using a constructor flag.
    input: Option<PathBuf>,
    /// Axis-aligned box with the given halfwidths.
    #[arg(long = "box", value_name = "HW", num_args = 1.., allow_negative_numbers = true)]
    box_halfwidths: Option<Vec<f64>>,
    /// Unit cube rotated by the angle (radians) in the x1-x2 plane.
    #[arg(long, value_name = "THETA", allow_negative_numbers = true)]
    rotated_box: Option<f64>,
    /// Inscribed ball approximation: radius S at subdivision depth K.
    #[arg(long, value_names = ["S", "K"], num_args = 2)]
    ball_approx: Option<Vec<f64>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minkowski sum of two bodies.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blaschke sum: the body whose surface area measure is the sum.
    Blaschke {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative facet-area tolerance for the solver.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Lp sum (Firey addition) of two bodies containing the origin.
    LpSum {
        a: PathBuf,
        b: PathBuf,
        /// Exponent p > 1 (use "inf" for the maximum).
        #[arg(long)]
        p: String,
        /// Sampling depth for the output polytope approximation.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// M-addition with a 1-unconditional planar parameter body.
    MSum {
        a: PathBuf,
        b: PathBuf,
        /// Parameter body: square | diamond | box:A:B | lq:Q:K.
        #[arg(long)]
        m: String,
        /// Sampling depth for the output polytope approximation.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Projection body of a polytope (a zonotope).
    Project {
        #[command(flatten)]
        body: BodyInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inverse projection body of an o-symmetric zonotope.
    Unproject {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative facet-area tolerance for the solver.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Sampled Hausdorff distance between two bodies.
    Hausdorff {
        a: PathBuf,
        b: PathBuf,
        /// Sphere sampling depth.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Levy-Prokhorov distance between two discrete spherical measures.
    LpDistance {
        a: PathBuf,
        b: PathBuf,
        /// Bisection tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Surface area measure of a body (generating measure for a zonotope).
    Measure {
        #[command(flatten)]
        body: BodyInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the named consistency checks; nonzero exit on any failure.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-serialize a body as JSON or export an OFF mesh (3D only).
    Export {
        #[command(flatten)]
        body: BodyInput,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn solver_config(tol: Option<f64>) -> Result<SolverConfig, CliError> {
    let mut config = SolverConfig::default();
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(CliError::validation("--tol must be positive"));
        }
        config.area_tolerance = t;
    }
    Ok(config)
}

fn parse_p(p: &str) -> Result<f64, CliError> {
    if p.eq_ignore_ascii_case("inf") {
        return Ok(f64::INFINITY);
    }
    let v: f64 = p
        .parse()
        .map_err(|_| CliError::validation("--p must be a real number > 1 or \"inf\""))?;
    if !(v > 1.0) {
        return Err(CliError::validation("--p must be > 1"));
    }
    Ok(v)
}

fn parse_m(spec: &str) -> Result<UnconditionalBody2D, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parsed = match parts.as_slice() {
        ["square"] => Ok(UnconditionalBody2D::square()),
        ["diamond"] => Ok(UnconditionalBody2D::diamond()),
        ["box", a, b] => {
            let (a, b) = (
                a.parse::<f64>().map_err(|_| GeomError::Invalid("bad box halfwidth".into()))?,
                b.parse::<f64>().map_err(|_| GeomError::Invalid("bad box halfwidth".into()))?,
            );
            UnconditionalBody2D::new(vec![
                vec![a, b],
                vec![-a, b],
                vec![a, -b],
                vec![-a, -b],
            ])
        }
        ["lq", q, k] => {
            let q = q.parse::<f64>().map_err(|_| GeomError::Invalid("bad lq exponent".into()))?;
            let k = k.parse::<usize>().map_err(|_| GeomError::Invalid("bad lq vertex count".into()))?;
            UnconditionalBody2D::lq_ball(q, k)
        }
        _ => Err(GeomError::Invalid(
            "--m must be square | diamond | box:A:B | lq:Q:K".into(),
        )),
    };
    parsed.map_err(CliError::from)
}

fn resolve_body(spec: &BodyInput) -> Result<Body, CliError> {
    let constructors = usize::from(spec.box_halfwidths.is_some())
        + usize::from(spec.rotated_box.is_some())
        + usize::from(spec.ball_approx.is_some());
    if constructors + usize::from(spec.input.is_some()) != 1 {
        return Err(CliError::validation(
            "provide exactly one of: an input file, --box, --rotated-box, --ball-approx",
        ));
    }
    if let Some(path) = &spec.input {
        return io::read_body(path);
    }
    if let Some(hw) = &spec.box_halfwidths {
        return Ok(Body::Poly(Polytope::boxed(hw)?));
    }
    if let Some(theta) = spec.rotated_box {
        let cube = Polytope::cube(3, 0.5)?;
        return Ok(Body::Poly(cube.apply_linear(&LinearMap::rotation_xy(3, theta))?));
    }
    let ball = spec.ball_approx.as_ref().expect("constructor count checked");
    let (s, k) = (ball[0], ball[1]);
    if !(s > 0.0) || k < 0.0 || k.fract() != 0.0 || k > 8.0 {
        return Err(CliError::validation(
            "--ball-approx takes a positive radius and an integer depth 0..=8",
        ));
    }
    Ok(Body::Poly(Polytope::ball_approx(s, k as usize)?))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Sum { a, b, out } => {
            let (a, b) = (io::read_body(&a)?, io::read_body(&b)?);
            match (a, b) {
                // The Minkowski sum of zonotopes is the zonotope on the
                // pooled generators; keep the exact representation.
                (Body::Zono(x), Body::Zono(y)) => {
                    let mut gens = x.generators().to_vec();
                    gens.extend(y.generators().iter().cloned());
                    let z = Zonotope::new(x.dim(), gens)?;
                    io::write_output(out.as_deref(), &io::zonotope_json(&z))?;
                }
                (a, b) => {
                    let s = a.into_polytope()?.minkowski_sum(&b.into_polytope()?)?;
                    io::write_output(out.as_deref(), &io::polytope_json(&s))?;
                }
            }
            Ok(0)
        }
        Cmd::Blaschke { a, b, out, tol } => {
            let config = solver_config(tol)?;
            let a = io::read_body(&a)?.into_polytope()?;
            let b = io::read_body(&b)?.into_polytope()?;
            let s = blaschke_sum(&a, &b, &config)?;
            io::write_output(out.as_deref(), &io::polytope_json(&s))?;
            Ok(0)
        }
        Cmd::LpSum { a, b, p, depth, out } => {
            let p = parse_p(&p)?;
            let a = io::read_body(&a)?.oracle();
            let b = io::read_body(&b)?.oracle();
            let sum = a.lp_sum(&b, p)?;
            io::write_output(out.as_deref(), &io::polytope_json(&sum.outer_polytope(depth)?))?;
            Ok(0)
        }
        Cmd::MSum { a, b, m, depth, out } => {
            let m = parse_m(&m)?;
            let a = io::read_body(&a)?.oracle();
            let b = io::read_body(&b)?.oracle();
            let sum = a.m_sum(&b, &m)?;
            io::write_output(out.as_deref(), &io::polytope_json(&sum.outer_polytope(depth)?))?;
            Ok(0)
        }
        Cmd::Project { body, out } => {
            let k = resolve_body(&body)?.into_polytope()?;
            let z = Zonotope::projection_body(&k)?;
            io::write_output(out.as_deref(), &io::zonotope_json(&z))?;
            Ok(0)
        }
        Cmd::Unproject { input, out, tol } => {
            let config = solver_config(tol)?;
            let z = match io::read_body(&input)? {
                Body::Zono(z) => z,
                Body::Poly(_) => {
                    return Err(CliError::validation("unproject expects a zonotope file"))
                }
            };
            let k = z.inverse_projection_body(&config)?;
            io::write_output(out.as_deref(), &io::polytope_json(&k))?;
            Ok(0)
        }
        Cmd::Hausdorff { a, b, depth, out } => {
            let a = io::read_body(&a)?.oracle();
            let b = io::read_body(&b)?.oracle();
            let est = hausdorff_distance(&a, &b, depth)?;
            io::write_output(
                out.as_deref(),
                &format!(
                    "{{\"value\": {}, \"error_bound\": {}}}\n",
                    io::jf(est.value),
                    io::jf(est.error_bound)
                ),
            )?;
            Ok(0)
        }
        Cmd::LpDistance { a, b, tol, out } => {
            let mu = io::read_measure(&a)?;
            let nu = io::read_measure(&b)?;
            let tol = tol.unwrap_or(1e-9);
            // Identical atom lists have distance exactly zero; skip the
            // bisection so the output is 0 rather than the bracket width.
            let value = if mu.atoms() == nu.atoms() {
                0.0
            } else {
                lp_distance(&mu, &nu, tol)?.value
            };
            io::write_output(out.as_deref(), &format!("{{\"value\": {}}}\n", io::jf(value)))?;
            Ok(0)
        }
        Cmd::Measure { body, out } => {
            let mu = match resolve_body(&body)? {
                Body::Poly(p) => p.surface_area_measure()?,
                Body::Zono(z) => z.generating_measure()?,
            };
            io::write_output(out.as_deref(), &io::measure_json(&mu))?;
            Ok(0)
        }
        Cmd::Verify { seed, filter, out } => {
            let reports = run_all(seed, filter.as_deref());
            if reports.is_empty() {
                return Err(CliError::validation("no check matches the filter"));
            }
            io::write_output(out.as_deref(), &io::reports_json(&reports))?;
            for r in &reports {
                eprintln!(
                    "{} {} (measured {:e}, tolerance {:e})",
                    if r.passed { "pass" } else { "FAIL" },
                    r.name,
                    r.measured,
                    r.tolerance
                );
            }
            Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
        }
        Cmd::Export { body, format, out } => {
            let body = resolve_body(&body)?;
            let text = match format {
                ExportFormat::Json => match &body {
                    Body::Poly(p) => io::polytope_json(p),
                    Body::Zono(z) => io::zonotope_json(z),
                },
                ExportFormat::Off => io::off_mesh(&body.into_polytope()?)?,
            };
            io::write_output(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            exit(e.code());
        }
    }
}

/// Oracle support access for either concrete body kind.
impl Body {
    fn oracle(&self) -> ConvexBodyOracle {
        match self {
            Body::Poly(p) => ConvexBodyOracle::from_polytope(p),
            Body::Zono(z) => {
                let z = z.clone();
                ConvexBodyOracle::new(z.dim(), move |x| z.support(x))
            }
        }
    }

    fn into_polytope(self) -> Result<Polytope, CliError> {
        match self {
            Body::Poly(p) => Ok(p),
            Body::Zono(z) => Ok(z.to_polytope()?),
        }
    }
}
