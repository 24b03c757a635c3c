use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qf")).args(args).env_remove("QF_MAX_HEIGHT").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn forms_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../forms")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn congruent_family_i() {
    let out = qf(&["congruent", "--family", "i", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!({"n":"5","x":"41","y":"12","z":"49","t":"31"}));
}

#[test]
fn solve_eq17_embeds_a_passing_report() {
    let out = qf(&["solve", "--equation", "eq17", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["coords"], serde_json::json!(["1681", "720", "1519", "984", "984", "492"]));
    assert_eq!(v["verification"][0]["outcome"], "pass");
}

#[test]
fn solve_eq16_cleared() {
    let out = qf(&["solve", "--equation", "eq16", "--a", "1", "--b", "1", "--clear-denominators"]);
    assert_eq!(
        json(&out)["coords"],
        serde_json::json!(["4728001", "-113279", "2989392", "3344161", "1494696", "2989392"])
    );
}

#[test]
fn lemma28_and_printed_gaps() {
    let out = qf(&["solve", "--equation", "lemma28", "--s", "2", "--t", "1"]);
    assert_eq!(json(&out)["coords"], serde_json::json!(["1", "2", "5/2", "-3/2"]));
    for eq in ["eq19", "eq20"] {
        let out = qf(&["solve", "--equation", eq]);
        assert_eq!(out.status.code(), Some(1));
        assert_eq!(json(&out)["error"], "UnresolvedSplitting");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["solve", "--equation", "eq18", "--a", "2", "--b", "1", "--symbolic"];
    assert_eq!(qf(&args).stdout, qf(&args).stdout);
    let args = ["search", "chain", "--phi", "z4", "--height", "20"];
    assert_eq!(qf(&args).stdout, qf(&args).stdout);
}

#[test]
fn written_solutions_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["solve", "--equation", "eq16", "--a", "1", "--b", "2", "--symbolic"],
        &["solve", "--equation", "eq19_variant", "--a", "1", "--b", "2", "--clear-denominators"],
        &["solve", "--equation", "surface21", "--family", "iii", "--a", "3", "--b", "1", "--symbolic"],
        &["solve", "--equation", "surface38", "--n", "5", "--x", "41", "--y", "12", "--k", "1519"],
        &["solve", "--equation", "lemma28", "--s", "1", "--t", "3", "--symbolic"],
        &["solve", "--equation", "remark_family", "--s", "4", "--t", "2"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let file = dir.path().join(format!("sol{i}.json"));
        let mut full = args.to_vec();
        full.extend(["--output", path_str(&file)]);
        assert_eq!(qf(&full).status.code(), Some(0), "{args:?}");
        let out = qf(&["verify", "--solution", path_str(&file)]);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn corrupted_solution_fails() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("sol.json");
    std::fs::write(&sol, r#"["4728001","-113279","2989392","3344161","1494696","2989393"]"#).unwrap();
    let form = forms_dir().join("eq16.json");
    let out = qf(&["verify", "--form", path_str(&form), "--solution", path_str(&sol)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verification"][0]["outcome"], "fail");

    std::fs::write(&sol, r#"["4728001","-113279","2989392","3344161","1494696","2989392"]"#).unwrap();
    let out = qf(&["verify", "--form", path_str(&form), "--solution", path_str(&sol)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    let out = qf(&["solve", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(qf(&["solve", "--equation", "eq99"]).status.code(), Some(2));
    assert_eq!(qf(&["congruent", "--family", "iv", "--a", "1", "--b", "1"]).status.code(), Some(2));
}

#[test]
fn height_cap_from_environment() {
    let form = forms_dir().join("surface21_n5.json");
    let args = ["search", "brute", "--form", path_str(&form), "--height", "50"];
    let capped = Command::new(env!("CARGO_BIN_EXE_qf")).args(args).env("QF_MAX_HEIGHT", "20").output().unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert_eq!(json(&capped)["error"], "HeightCapExceeded");
    let out = qf(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["solutions"].as_array().unwrap().contains(&serde_json::json!(["49", "31", "41", "12"])));
}

#[test]
fn searches() {
    let out = qf(&["search", "congruent", "--n", "6", "--bound", "10"]);
    assert_eq!(json(&out), serde_json::json!({"n":"6","x":"5","y":"2","z":"7","t":"1"}));
    assert_eq!(qf(&["search", "congruent", "--n", "1", "--bound", "100"]).status.code(), Some(1));
    let out = qf(&["search", "splitting", "--family", "i", "--signature", "1,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = qf(&["search", "splitting", "--family", "ii", "--signature", "4,-2,-4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chains_and_expansion() {
    let out = qf(&["chain", "--t", "1", "--phi", "2z4,z4"]);
    assert_eq!(json(&out)["phi_chain"]["common_value"], "12800");
    let out = qf(&["chain", "--t", "3", "--corollary"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["solutions"].as_array().unwrap().len(), 3);
    let out = qf(&["expand", "--s", "1", "--t", "2"]);
    assert_eq!(json(&out)["terms"], 6);
    let out = qf(&["ec", "--n", "5", "--u", "-4", "--v", "6", "--k", "2"]);
    assert_eq!(json(&out)["multiple"]["point"], serde_json::json!({"u":"1681/144","v":"-62279/1728"}));
}
