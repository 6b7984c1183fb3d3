use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use spinim::catalog::{self, FixtureName};
use spinim::io::{self, GeometryJson, ImmersionJson, SpinorFieldJson};

fn spinim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinim"))
        .args(args)
        .output()
        .expect("spawn spinim")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn fixtures_pass_check() {
    for name in ["flat_plane", "hypersphere", "product_slice"] {
        let o = spinim(&["check", "--fixture", name, "--format", "json"]);
        assert_eq!(code(&o), 0, "{name}");
        let v = json(&o);
        assert_eq!(v["schema"], "spinim/1");
        assert_eq!(v["geometry"], name);
    }
}

#[test]
fn text_output_is_default() {
    let o = spinim(&["check", "--fixture", "flat_plane"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("gauss"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn input_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["check", "--fixture", "nope"],
        &["check", "--geometry", "no-such-geometry"],
        &["check"],
        &["check", "--geometry", "sol3"],
        &["obstruct", "--geometry", "e-kappa-tau", "--kappa", "1"],
        &["obstruct", "--geometry", "sol3", "--alpha", "2"],
        &["check", "--fixture", "flat_plane", "--tolerance", "-1"],
    ];
    for args in cases {
        let o = spinim(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(code(&spinim(&["frobnicate"])), 2);
    assert_eq!(code(&spinim(&["check", "--bogus"])), 2);
}

#[test]
fn failed_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let data = ImmersionJson::from_data(&catalog::build_fixture::<f64>(FixtureName::FlatPlane).fixtures[0].data);
    let mut data = data;
    data.a = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]];
    let path = write(dir.path(), "data.json", &io::to_json(&data));
    let o = spinim(&["check", "--geometry", "flat", "--data", &path, "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert!(v["gauss"].as_f64().unwrap() > 0.0 || v["codazzi"].as_f64().unwrap() > 0.0);
}

#[test]
fn geometry_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let g = catalog::sol3::<f64>().geometry;
    let path = write(dir.path(), "sol.json", &io::to_json(&GeometryJson::from_geometry(&g)));
    let from_file = json(&spinim(&["obstruct", "--geometry", &path, "--format", "json"]));
    let builtin = json(&spinim(&["obstruct", "--geometry", "sol3", "--format", "json"]));
    assert_eq!(from_file["verdict"], builtin["verdict"]);
    assert_eq!(from_file["ricci"], builtin["ricci"]);
    assert_eq!(from_file["case_tag"], builtin["case_tag"]);
}

#[test]
fn malformed_geometry_file_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "g.json", r#"{"name": "x", "christoffel": [[[1]]]}"#);
    assert_eq!(code(&spinim(&["obstruct", "--geometry", &path])), 2);
    let path = write(dir.path(), "h.json", "not json");
    assert_eq!(code(&spinim(&["obstruct", "--geometry", &path])), 2);
}

#[test]
fn killing_with_spinor_in_data_file() {
    let dir = tempfile::tempdir().unwrap();
    let entry = catalog::build_fixture::<f64>(FixtureName::Hypersphere);
    let mut data = ImmersionJson::from_data(&entry.fixtures[0].data);
    data.spinor = Some(SpinorFieldJson::from_field(&entry.special_spinor.unwrap()));
    let path = write(dir.path(), "d.json", &io::to_json(&data));
    let o = spinim(&["killing", "--geometry", "e-kappa-tau", "--kappa", "4", "--tau", "1", "--data", &path, "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let a_rec = &v["reconstruction"]["A"];
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((a_rec[i][j].as_f64().unwrap() - want).abs() < 1e-9, "{a_rec}");
        }
    }
}

#[test]
fn killing_detects_wrong_branch() {
    let dir = tempfile::tempdir().unwrap();
    let entry = catalog::build_fixture::<f64>(FixtureName::Hypersphere);
    let mut data = ImmersionJson::from_data(&entry.fixtures[0].data);
    data.branch = -data.branch;
    let path = write(dir.path(), "d.json", &io::to_json(&data));
    let o = spinim(&["killing", "--fixture", "hypersphere", "--data", &path]);
    assert_eq!(code(&o), 1);
}

#[test]
fn obstruct_reports_candidates() {
    let o = spinim(&["obstruct", "--geometry", "e-kappa-tau", "--kappa", "1", "--tau", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["case_tag"], "Candidates");
    assert_eq!(v["verdict"], "NonImmersible");
    for r in v["codazzi_residuals"].as_array().unwrap() {
        assert!(r.as_f64().unwrap() > 1.0);
    }
}

#[test]
fn torus_bundle_variants() {
    let golden = json(&spinim(&["obstruct", "--geometry", "torus-bundle", "--format", "json"]));
    assert_eq!(golden["verdict"], "NonImmersible");
    let two = spinim(&["obstruct", "--geometry", "torus-bundle", "--alpha", "2", "--format", "json"]);
    assert_eq!(code(&two), 0);
    assert_eq!(code(&spinim(&["obstruct", "--geometry", "torus-bundle", "--alpha", "0.5"])), 2);
}

#[test]
fn catalog_and_conventions() {
    let o = spinim(&["catalog-list", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for want in ["sol3", "flat_plane", "hypersphere", "product_slice"] {
        assert!(names.contains(&want), "{names:?}");
    }
    let o = spinim(&["conventions", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["schema"], "spinim/1");
}
