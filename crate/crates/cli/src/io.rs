//! File formats and error-to-exit-code mapping.
//!
//! Bodies: `{"type":"polytope","dim":n,"vertices":[[...],...]}`,
//! `{"type":"zonotope","dim":n,"generators":[[...],...]}`, or
//! `{"type":"box","halfwidths":[...]}`. Measures:
//! `{"dim":n,"atoms":[{"u":[...],"w":w},...]}`. All numbers are written with
//! 17 significant digits so a round trip re-reads them bit-identically.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use blaschke::{CheckReport, DiscreteSphericalMeasure, GeomError, Polytope, Zonotope};

pub enum Body {
    Poly(Polytope),
    Zono(Zonotope),
}

pub struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CliError { message: msg.into(), code: 2 }
    }

    pub fn message(&self) -> &str {
        &self.message
    }

    pub fn code(&self) -> i32 {
        self.code
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        let code = match e {
            GeomError::SolverStalled { .. } => 3,
            _ => 2,
        };
        CliError { message: e.to_string(), code }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::validation(e.to_string())
    }
}

// ------------------------------------------------------------------ input

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum BodyFile {
    Polytope {
        dim: usize,
        vertices: Vec<Vec<f64>>,
        /// Informational only; recomputed on export.
        #[serde(default)]
        #[allow(dead_code)]
        height: Option<f64>,
    },
    Zonotope {
        dim: usize,
        generators: Vec<Vec<f64>>,
    },
    Box {
        halfwidths: Vec<f64>,
    },
}

#[derive(Deserialize)]
struct MeasureAtom {
    u: Vec<f64>,
    w: f64,
}

#[derive(Deserialize)]
struct MeasureFile {
    dim: usize,
    atoms: Vec<MeasureAtom>,
}

fn parse_error(path: &Path, detail: impl std::fmt::Display) -> CliError {
    CliError::validation(format!("{}: {detail}", path.display()))
}

pub fn read_body(path: &Path) -> Result<Body, CliError> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let file: BodyFile = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    match file {
        BodyFile::Polytope { dim, vertices, .. } => {
            Ok(Body::Poly(Polytope::from_vertices(dim, vertices)?))
        }
        BodyFile::Zonotope { dim, generators } => Ok(Body::Zono(Zonotope::new(dim, generators)?)),
        BodyFile::Box { halfwidths } => Ok(Body::Poly(Polytope::boxed(&halfwidths)?)),
    }
}

pub fn read_measure(path: &Path) -> Result<DiscreteSphericalMeasure, CliError> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let file: MeasureFile = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    let atoms = file.atoms.into_iter().map(|a| (a.u, a.w)).collect();
    Ok(DiscreteSphericalMeasure::new(file.dim, atoms)?)
}

// ----------------------------------------------------------------- output

/// A float with 17 significant digits: enough for `f64` to round-trip
/// bit-identically through JSON.
pub fn jf(x: f64) -> String {
    format!("{x:.16e}")
}

fn vector_json(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| jf(x)).collect();
    format!("[{}]", parts.join(", "))
}

fn vectors_json(vs: &[Vec<f64>]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| vector_json(v)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn polytope_json(p: &Polytope) -> String {
    let mut extra = String::new();
    if p.dim() == 3 {
        let height = p.support(&[0.0, 0.0, 1.0]) + p.support(&[0.0, 0.0, -1.0]);
        extra = format!(", \"height\": {}", jf(height));
    }
    format!(
        "{{\"type\": \"polytope\", \"dim\": {}, \"vertices\": {}{extra}}}\n",
        p.dim(),
        vectors_json(p.vertices())
    )
}

pub fn zonotope_json(z: &Zonotope) -> String {
    format!(
        "{{\"type\": \"zonotope\", \"dim\": {}, \"generators\": {}}}\n",
        z.dim(),
        vectors_json(z.generators())
    )
}

pub fn measure_json(mu: &DiscreteSphericalMeasure) -> String {
    let atoms: Vec<String> = mu
        .atoms()
        .iter()
        .map(|(u, w)| format!("{{\"u\": {}, \"w\": {}}}", vector_json(u), jf(*w)))
        .collect();
    format!("{{\"dim\": {}, \"atoms\": [{}]}}\n", mu.dim(), atoms.join(", "))
}

pub fn reports_json(reports: &[CheckReport]) -> String {
    let mut text = serde_json::to_string_pretty(reports).expect("reports serialize");
    text.push('\n');
    text
}

/// ASCII OFF mesh of a 3-polytope: vertex list then one face ring per facet.
pub fn off_mesh(p: &Polytope) -> Result<String, CliError> {
    if p.dim() != 3 {
        return Err(CliError::validation("OFF export is only defined for 3-dimensional bodies"));
    }
    let edges: usize = p.facets().iter().map(|f| f.vertex_ids.len()).sum::<usize>() / 2;
    let mut text = format!("OFF\n{} {} {}\n", p.vertices().len(), p.facets().len(), edges);
    for v in p.vertices() {
        text.push_str(&format!("{} {} {}\n", jf(v[0]), jf(v[1]), jf(v[2])));
    }
    for f in p.facets() {
        text.push_str(&f.vertex_ids.len().to_string());
        for id in &f.vertex_ids {
            text.push_str(&format!(" {id}"));
        }
        text.push('\n');
    }
    Ok(text)
}

pub fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| parse_error(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
