use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nested_quot::cli::{run, EXIT_INVALID_POINT, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_USAGE};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn nq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nested-quot")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nested-quot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn classify_examples() {
    let o = nq(&["classify", "-m", "1", "-r", "3", "-n", "2,5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("smooth (Curve(1))"));
    assert!(stdout(&nq(&["classify", "-m", "2", "-r", "2", "-n", "2,3"])).starts_with("singular (Singular-B)"));
    assert!(stdout(&nq(&["classify", "-m", "2", "-r", "1", "-n", "7"])).starts_with("smooth (Fogarty(3a))"));
}

#[test]
fn jsonl_has_versioned_header() {
    let (code, out, _) = in_process(&["--format", "jsonl", "classify", "-m", "7", "-r", "9", "-n", "0,1,1"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["format"], "nested-quot-report");
    assert_eq!(lines[0]["version"], 1);
    assert_eq!(lines[1]["case_label"], "ProjBundle(2)");
    assert_eq!(lines[1]["normalized_n"], serde_json::json!([1]));
    assert_eq!(lines[1]["expected_dim"], 15);
}

#[test]
fn tangent_of_fixtures() {
    let o = nq(&["tangent", fixture("fat_point_m2_r2.point").to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("tangent dimension: 8"));
    assert!(s.contains("expected dimension: 6"));
    assert!(s.contains("verdict: SingularHere"));

    let s = stdout(&nq(&["tangent", fixture("simple_point_m2_r2.point").to_str().unwrap()]));
    assert!(s.contains("tangent dimension: 3") && s.contains("SmoothHere"));

    let (code, out, _) = in_process(&[
        "--format",
        "jsonl",
        "tangent",
        "--delta",
        fixture("nested_fat_point_m2_r2.point").to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let rec: serde_json::Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
    assert_eq!(rec["tangent_dim"], 7);
    assert_eq!(rec["delta_domain"], 11);
    assert_eq!(rec["delta_target"], 4);
}

#[test]
fn diagnostics_and_exit_codes() {
    let (code, _, err) = in_process(&["tangent", fixture("corrupted.point").to_str().unwrap()]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 9"));
    let (code, _, err) = in_process(&["tangent", fixture("unstable.point").to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID_POINT);
    assert!(err.contains("not stable"));
    let (code, _, _) = in_process(&["witness", "-m", "2", "-r", "1", "-n", "3"]);
    assert_eq!(code, EXIT_UNSUPPORTED);
    let (code, _, _) = in_process(&["classify", "-m", "2", "-r", "1"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out, _) = in_process(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("classify"));
}

#[test]
fn witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.point");
    let p = path.to_str().unwrap();
    assert!(nq(&["witness", "-m", "3", "-r", "1", "-n", "4", "-o", p]).status.success());
    let s = stdout(&nq(&["tangent", p]));
    assert!(s.contains("tangent dimension: 18") && s.contains("expected dimension: 12"));
    let (code, printed, _) = in_process(&["witness", "-m", "3", "-r", "1", "-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(printed, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn verify_examples() {
    let s = stdout(&nq(&["verify", "-m", "2", "-r", "1", "-n", "4"]));
    assert!(s.contains("SMOOTH-CONSISTENT: 5 fixed points, max tangent 8, expected 8"));
    let s = stdout(&nq(&["verify", "-m", "3", "-r", "1", "-n", "4"]));
    assert!(s.contains("SINGULAR-CONFIRMED") && s.contains("max tangent 18"));

    let (code, out, _) = in_process(&["--format", "jsonl", "verify", "-m", "2", "-r", "1", "-n", "3"]);
    assert_eq!(code, 0);
    let recs: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 1 + 3 + 1);
    assert!(recs[1..4].iter().all(|r| r["kind"] == "fixed_point" && r["tangent_dim"] == 6));
    assert_eq!(recs[4]["outcome"], "SMOOTH-CONSISTENT");
    assert_eq!(recs[4]["agrees"], true);
}

#[test]
fn bound_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_nested-quot"))
        .args(["verify", "-m", "2", "-r", "1", "-n", "4"])
        .env(nested_quot::bounds::ENV_MAX_FIXED_POINTS, "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(nested_quot::cli::EXIT_RESOURCE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fixed-point count"));
}

#[test]
fn ncquot_commands() {
    assert_eq!(stdout(&nq(&["ncquot", "dim", "-m", "2", "-n", "3", "-r", "2"])).trim(), "15");
    let nc = fixture("noncommuting_m2.point");
    let gauged = fixture("noncommuting_m2_gauged.point");
    assert_eq!(stdout(&nq(&["ncquot", "stable", nc.to_str().unwrap()])).trim(), "stable");
    assert!(stdout(&nq(&["ncquot", "defect", nc.to_str().unwrap()])).contains("[2]"));
    let s = stdout(&nq(&["ncquot", "iso", nc.to_str().unwrap(), gauged.to_str().unwrap()]));
    assert_eq!(s, "isomorphic\n2 1\n1 1\n");
    let hook = fixture("monomial_hook_m2.point");
    let s = stdout(&nq(&["ncquot", "iso", nc.to_str().unwrap(), hook.to_str().unwrap()]));
    assert_eq!(s.trim(), "not isomorphic");
    let (code, _, _) = in_process(&["ncquot", "defect", fixture("nested_fat_point_m2_r2.point").to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID_POINT);
}
