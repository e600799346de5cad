use std::path::PathBuf;

use triop_cli::{run, RunReport, Status};

fn triop(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["triop"];
    full.extend_from_slice(args);
    run(full, None)
}

fn json(args: &[&str]) -> (i32, RunReport) {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    let (code, out, err) = triop(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const A3: &str = r#"{"dim":3,"brackets":[{"i":1,"j":2,"k":3,"coeffs":["1","0","0"]}]}"#;

#[test]
fn valid_algebra_passes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "a3.json", A3);
    let (code, r) = json(&["verify-algebra", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.metadata.d, 3);
}

// [e1,e2,e3] = e4, [e1,e2,e4] = e3 breaks the fundamental identity.
#[test]
fn broken_algebra_fails() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "bad.json",
        r#"{"dim":4,"brackets":[{"i":1,"j":2,"k":3,"coeffs":["0","0","0","1"]},{"i":1,"j":3,"k":4,"coeffs":["1","0","0","0"]}]}"#,
    );
    let (code, r) = json(&["verify-algebra", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(r.items[0].residual_summary.contains("violations; first"));
}

#[test]
fn malformed_input_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "bad.json", "{not json");
    let (code, out, err) = triop(&["verify-algebra", "--input", p.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.starts_with("error:"));
    assert_eq!(triop(&["verify-algebra", "--input", "/nonexistent.json"]).0, 2);
}

#[test]
fn usage_errors_are_exit_2() {
    assert_eq!(triop(&["no-such-command"]).0, 2);
    assert_eq!(triop(&["search-grid", "--bound", "x"]).0, 2);
    assert_eq!(triop(&["induce", "--family", "O99"]).0, 2);
    assert_eq!(triop(&["induce", "--family", "O7", "--params", "a13"]).0, 2);
    assert_eq!(triop(&["search-grid", "--bound", "9"]).0, 2);
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = triop(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("search-grid"));
    assert_eq!(triop(&["--version"]).0, 0);
}

#[test]
fn bad_radicand_is_exit_2() {
    assert_eq!(run(["triop", "semidirect"], Some("4")).0, 2);
    assert_eq!(run(["triop", "semidirect"], Some("x")).0, 2);
    assert_eq!(run(["triop", "semidirect"], Some("5")).0, 0);
}

#[test]
fn identity_operator_fails_on_the_one_triple() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "id.json", r#"{"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#);
    let (code, r) = json(&["verify-operator", "--operator", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r.items[0].name, "triple (1,2,3)");
    assert_eq!(r.items[0].residual_summary, "(2, 0, 0)");
}

#[test]
fn parametric_operator_with_params() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "op.json", r#"{"entries":[["0","0","0"],["0","0","0"],["a31","0","0"]]}"#);
    let path = p.to_str().unwrap();
    assert_eq!(json(&["verify-operator", "--operator", path]).0, 0);
    assert_eq!(json(&["verify-operator", "--operator", path, "--params", "a31=s"]).0, 0);
}

#[test]
fn classify_precondition_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "id.json", r#"{"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#);
    let (code, _, err) = triop(&["classify", "--matrix", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("precondition"));
}

#[test]
fn classify_zero_matrix_matches() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "z.json", r#"{"entries":[["0","0","0"],["0","0","0"],["0","0","0"]]}"#);
    let (code, r) = json(&["classify", "--matrix", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(r.items.iter().any(|i| i.name == "O1"));
}

#[test]
fn catalog_list_has_31_families_in_order() {
    let (code, r) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(r.items.len(), 31);
    assert_eq!(r.items[1].name, "O2");
    assert_eq!(r.items[30].name, "O31");
}

#[test]
fn induce_o7_passes_and_lists_products() {
    let (code, r) = json(&["induce", "--family", "O7"]);
    assert_eq!(code, 0);
    assert!(r.items.iter().any(|i| i.name == "axioms"));
    assert!(r.items.iter().any(|i| i.name.starts_with('{')));
}

#[test]
fn induce_rejects_non_operator() {
    let (code, r) = json(&["induce", "--family", "O19"]);
    assert_eq!(code, 1);
    assert_eq!(r.items[0].name, "o-operator");
}

#[test]
fn documented_table_finding_is_exit_3() {
    let (code, r) = json(&["prelie", "diff", "--family", "O18"]);
    assert_eq!(code, 3);
    assert_eq!(r.items[0].status, Status::Finding);
    assert_eq!(json(&["prelie", "diff", "--family", "O2"]).0, 0);
}

#[test]
fn semidirect_adjoint_passes() {
    let (code, r) = json(&["semidirect", "--rep", "adjoint"]);
    assert_eq!(code, 0);
    assert!(r.items.iter().any(|i| i.name == "fundamental-identity"));
}

#[test]
fn cybe_single_solution() {
    assert_eq!(json(&["cybe", "verify", "--solution", "r5"]).0, 0);
    assert_eq!(triop(&["cybe", "verify", "--solution", "r40"]).0, 2);
}

#[test]
fn text_report_layout() {
    let (code, out, _) = triop(&["semidirect"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "semidirect");
    assert_eq!(lines[1], "5 items, pass");
    assert!(lines[2].ends_with("d=3 version=0.1.0 seed=20240601"));
}

#[test]
fn timings_only_when_requested() {
    let (_, out, _) = triop(&["dim2-experiment", "--format", "json"]);
    assert!(!out.contains("durationMillis"));
    let (_, out, _) = triop(&["dim2-experiment", "--format", "json", "--timings"]);
    assert!(out.contains("durationMillis"));
}

#[test]
fn seed_changes_samples_but_not_verdict() {
    let (a, ra) = json(&["suite", "conditions", "--count", "50", "--seed", "1"]);
    let (b, rb) = json(&["suite", "conditions", "--count", "50", "--seed", "2"]);
    assert_eq!((a, b), (0, 0));
    assert_eq!(rb.metadata.seed, 2);
    assert_ne!(ra.metadata, rb.metadata);
}

#[test]
fn jobs_do_not_change_output() {
    let one = triop(&["catalog", "verify", "--instances", "2", "--jobs", "1", "--format", "json"]);
    let four = triop(&["catalog", "verify", "--instances", "2", "--jobs", "4", "--format", "json"]);
    assert_eq!(one, four);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_triop");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["semidirect"]), Some(0));
    assert_eq!(status(&["dim2-experiment"]), Some(3));
    assert_eq!(status(&["induce", "--family", "O29"]), Some(1));
    assert_eq!(status(&["bogus"]), Some(2));
    let out = std::process::Command::new(bin).arg("semidirect").env("TRIOP_D", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
