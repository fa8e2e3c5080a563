//! End-to-end tests of the command-line interface: formats, exit codes,
//! round trips, and reproducibility.

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;
use std::fs;
use tempfile::TempDir;

fn cmd() -> Command {
    Command::cargo_bin("blaschke").expect("binary")
}

fn write(dir: &TempDir, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, content).unwrap();
    path
}

const CUBE: &str = r#"{"type":"box","halfwidths":[0.5,0.5,0.5]}"#;

#[test]
fn blaschke_sum_of_cube_and_rotation_is_the_octagonal_prism() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let rot = dir.path().join("cube_rot.json");
    cmd()
        .args(["export", "--rotated-box", "0.7853981633974483", "--out"])
        .arg(&rot)
        .assert()
        .success();
    let out = dir.path().join("sum.json");
    cmd()
        .arg("blaschke")
        .arg(&cube)
        .arg(&rot)
        .arg("--out")
        .arg(&out)
        .assert()
        .success();
    let body: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let height = body["height"].as_f64().unwrap();
    assert!((height - (1.0 + 2.0f64.sqrt()).sqrt()).abs() < 1e-6, "height {height}");
    assert_eq!(body["vertices"].as_array().unwrap().len(), 16);
}

#[test]
fn lp_distance_of_a_measure_to_itself_is_zero() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let m1 = dir.path().join("m1.json");
    cmd().arg("measure").arg(&cube).arg("--out").arg(&m1).assert().success();
    cmd()
        .arg("lp-distance")
        .arg(&m1)
        .arg(&m1)
        .assert()
        .success()
        .stdout(predicate::str::contains("\"value\": 0.0000000000000000e0"));
}

#[test]
fn projection_of_the_unit_cube_is_the_axis_zonotope() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let output = cmd().arg("project").arg(&cube).assert().success();
    let body: Value =
        serde_json::from_slice(&output.get_output().stdout).unwrap();
    assert_eq!(body["type"], "zonotope");
    let gens = body["generators"].as_array().unwrap();
    // The antipodal facet pairs merge: one unit generator per axis,
    // so the support function is sum |u_i|.
    assert_eq!(gens.len(), 3);
    for g in gens {
        let v: Vec<f64> = g.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert!((v.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn unproject_inverts_project() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let pk = dir.path().join("pk.json");
    cmd().arg("project").arg(&cube).arg("--out").arg(&pk).assert().success();
    let output = cmd().arg("unproject").arg(&pk).assert().success();
    let body: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    assert!((body["height"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert_eq!(body["vertices"].as_array().unwrap().len(), 8);
}

#[test]
fn json_round_trip_is_bit_identical() {
    let dir = TempDir::new().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    cmd()
        .args(["export", "--ball-approx", "1.25", "1", "--out"])
        .arg(&first)
        .assert()
        .success();
    cmd().arg("export").arg(&first).arg("--out").arg(&second).assert().success();
    let parse_vertices = |path: &std::path::Path| -> Vec<Vec<u64>> {
        let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        let mut verts: Vec<Vec<u64>> = v["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| {
                row.as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_f64().unwrap().to_bits())
                    .collect()
            })
            .collect();
        verts.sort();
        verts
    };
    // Identical vertex sets, coordinate for coordinate, bit for bit.
    assert_eq!(parse_vertices(&first), parse_vertices(&second));
}

#[test]
fn verify_is_reproducible_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        cmd()
            .args(["verify", "--seed", "11", "--filter", "hlawka", "--out"])
            .arg(out)
            .assert()
            .success();
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(fs::read_to_string(&a).unwrap().contains("\"passed\": true"));
}

#[test]
fn off_export_lists_cube_mesh() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    cmd()
        .arg("export")
        .arg(&cube)
        .args(["--format", "off"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("OFF\n8 6 12\n"));
}

#[test]
fn hausdorff_between_nested_cubes() {
    let dir = TempDir::new().unwrap();
    let small = write(&dir, "small.json", CUBE);
    let big = write(&dir, "big.json", r#"{"type":"box","halfwidths":[1.0,1.0,1.0]}"#);
    let output = cmd().arg("hausdorff").arg(&small).arg(&big).assert().success();
    let v: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    let value = v["value"].as_f64().unwrap();
    let bound = v["error_bound"].as_f64().unwrap();
    // True distance is sqrt(3)/2, attained at the diagonal.
    let exact = 3.0f64.sqrt() / 2.0;
    assert!(value <= exact + 1e-12 && value + bound >= exact, "value {value} bound {bound}");
}

#[test]
fn lp_sum_of_a_cube_with_itself_scales_supports() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let output = cmd()
        .arg("lp-sum")
        .arg(&cube)
        .arg(&cube)
        .args(["--p", "2", "--depth", "2"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    // h^2 = 2 h^2 => the axis support is 0.5 sqrt(2); the outer approximation
    // only touches the body from outside.
    let height = v["height"].as_f64().unwrap();
    assert!((height - 2.0f64.sqrt()).abs() < 1e-9, "height {height}");
}

#[test]
fn m_sum_with_the_square_is_minkowski_addition() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    let output = cmd()
        .arg("m-sum")
        .arg(&cube)
        .arg(&cube)
        .args(["--m", "square", "--depth", "2"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    assert!((v["height"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn sum_of_zonotopes_pools_generators() {
    let dir = TempDir::new().unwrap();
    let z = write(
        &dir,
        "z.json",
        r#"{"type":"zonotope","dim":3,"generators":[[1.0,0.0,0.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]}"#,
    );
    let output = cmd().arg("sum").arg(&z).arg(&z).assert().success();
    let v: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    assert_eq!(v["type"], "zonotope");
    // Parallel generators merge back into one per axis, doubled.
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 3);
    assert_eq!(gens[0][0].as_f64().unwrap().abs().max(gens[0][1].as_f64().unwrap().abs()).max(gens[0][2].as_f64().unwrap().abs()), 2.0);
}

#[test]
fn parse_and_validation_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    // Missing file.
    cmd().arg("export").arg(dir.path().join("missing.json")).assert().code(2);
    // Malformed JSON.
    let bad = write(&dir, "bad.json", "{\"type\":\"polytope\"");
    cmd().arg("export").arg(&bad).assert().code(2);
    // Degenerate body (not full-dimensional).
    let flat = write(
        &dir,
        "flat.json",
        r#"{"type":"polytope","dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0]]}"#,
    );
    cmd().arg("measure").arg(&flat).assert().code(2);
    // Unknown subcommand (clap).
    cmd().arg("frobnicate").assert().code(2);
    // Measure whose centroid is off: not valid Minkowski data, but caught at
    // the validation layer.
    let lopsided = write(
        &dir,
        "lop.json",
        r#"{"dim":3,"atoms":[{"u":[1,0,0],"w":2.0},{"u":[-1,0,0],"w":1.0},{"u":[0,1,0],"w":1.0},{"u":[0,-1,0],"w":1.0},{"u":[0,0,1],"w":1.0},{"u":[0,0,-1],"w":1.0}]}"#,
    );
    let cube = write(&dir, "cube.json", CUBE);
    let m1 = dir.path().join("m1.json");
    cmd().arg("measure").arg(&cube).arg("--out").arg(&m1).assert().success();
    cmd().arg("lp-distance").arg(&m1).arg(&lopsided).assert().success();
}

#[test]
fn solver_stall_exits_3() {
    let dir = TempDir::new().unwrap();
    let cube = write(&dir, "cube.json", CUBE);
    // An unreachable tolerance forces a stall report.
    cmd()
        .arg("blaschke")
        .arg(&cube)
        .arg(&cube)
        .args(["--tol", "1e-300"])
        .assert()
        .code(3);
}

#[test]
fn measure_constructors_build_instances() {
    let output = cmd()
        .args(["measure", "--box", "0.5", "0.5", "0.5"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&output.get_output().stdout).unwrap();
    let atoms = v["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 6);
    for a in atoms {
        assert_eq!(a["w"].as_f64().unwrap(), 1.0);
    }
    // Constructors and files are mutually exclusive.
    cmd().args(["measure", "--box", "1.0", "--rotated-box", "0.5"]).assert().code(2);
}
