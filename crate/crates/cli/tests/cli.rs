use std::path::PathBuf;
use std::process::{Command, Output};

use acyt_core::report::VerificationReport;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{name}.toml"))
}

fn acyt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acyt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(sub: &str, name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args = vec![sub, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    acyt(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn human_report_matches_golden_file() {
    let out = run("check", "nilmanifold_4_1", &[]);
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.trim_start().starts_with("tor1_connection_match: pass")));
    let golden = include_str!("golden/nilmanifold_4_1.txt");
    assert_eq!(text, golden);
}

#[test]
fn exit_codes_follow_the_outcome() {
    for name in ["nilmanifold_4_1", "abelian", "su2_su2_cartan"] {
        assert_eq!(run("check", name, &[]).status.code(), Some(0), "{name}");
    }
    let out = run("check", "perturbed_connection", &["--format", "machine"]);
    assert_eq!(out.status.code(), Some(1));
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    for id in [
        "lemma_4form_match",
        "pair_symmetry_match",
        "tor1_connection_match",
    ] {
        assert_eq!(report.record(id).unwrap().status.as_str(), "fail", "{id}");
    }
    assert_eq!(report.verdicts.perturbed.unwrap().lemma_4form, Some(false));
}

#[test]
fn input_problems_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        "name = \"x\"\ndim = 6\nstructure_constants = [ { indices = [1, 2] value = \"1\" } ]\n",
    )
    .unwrap();
    let out = acyt(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let jacobi = dir.path().join("jacobi.toml");
    std::fs::write(
        &jacobi,
        "name = \"j\"\ndim = 6\nstructure_constants = [\n  { indices = [1, 2, 3], value = \"1\" },\n  { indices = [1, 3, 1], value = \"1\" },\n]\n",
    )
    .unwrap();
    let out = acyt(&["check", "--input", jacobi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));

    let out = run("check", "abelian", &["--checks", "no_such_check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_g1_input_fails_without_a_torsion_connection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("not_g1.toml");
    std::fs::write(
        &path,
        "name = \"n\"\ndim = 6\nstructure_constants = [ { indices = [1, 3, 1], value = \"1\" } ]\n",
    )
    .unwrap();
    let out = acyt(&[
        "check",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    assert!(!report.verdicts.g1);
}

#[test]
fn machine_report_round_trips() {
    for sub in ["check", "torsion", "curvature", "soliton", "identities"] {
        let out = run(sub, "su2_su2_cartan", &["--format", "machine"]);
        let text = stdout(&out);
        let report = VerificationReport::from_json(&text).unwrap();
        assert_eq!(report.to_json(), text, "{sub}");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = stdout(&run("check", "nilmanifold_4_1", &["--format", "machine"]));
    let b = stdout(&run("check", "nilmanifold_4_1", &["--format", "machine"]));
    assert_eq!(a, b);
    let a = stdout(&run(
        "check",
        "nilmanifold_4_1",
        &["--format", "machine", "--arithmetic", "float"],
    ));
    let b = stdout(&run(
        "check",
        "nilmanifold_4_1",
        &["--format", "machine", "--arithmetic", "float"],
    ));
    assert_eq!(a, b);
}

#[test]
fn subcommands_and_check_lists_narrow_the_report() {
    let out = run(
        "check",
        "nilmanifold_4_1",
        &["--format", "machine", "--checks", "tor1,lambda_match"],
    );
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    let ids: Vec<_> = report.records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["lambda_match", "tor1_connection_match"]);

    let out = acyt(&["identities", "--fixture", "abelian", "--format", "machine"]);
    let report = VerificationReport::from_json(&stdout(&out)).unwrap();
    assert!(report.record("phi_phi_4").is_some());
    assert!(report.record("torsion_match").is_none());
}

#[test]
fn exact_reports_carry_no_tolerance() {
    let text = stdout(&run("check", "nilmanifold_4_1", &["--format", "machine"]));
    assert!(!text.contains("tolerance"));
    let text = stdout(&run(
        "check",
        "nilmanifold_4_1",
        &["--format", "machine", "--arithmetic", "float"],
    ));
    assert!(text.contains("\"tolerance\""));
}
