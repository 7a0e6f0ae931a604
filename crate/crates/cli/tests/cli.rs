use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pfaffkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfaffkit"))
        .args(args)
        .env_remove("PFAFFKIT_OUTPUT_DIR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_j_at_two() {
    let out = pfaffkit(&["gen", "--ideal", "J", "--f", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t_1*x_(1,2)\nt_2*x_(1,2)\n");
}

#[test]
fn gen_pfaffian_at_four() {
    let out = pfaffkit(&["gen", "--ideal", "I", "--f", "4", "--char", "7"]);
    assert_eq!(stdout(&out), "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)\n");
}

#[test]
fn codim_of_j_at_four() {
    let out = pfaffkit(&["codim", "--ideal", "J", "--f", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["codim"], 3);
    assert_eq!(v["dim"], 7);
    assert!(v["hilbert_numerator"].is_array());
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["gen", "--ideal", "J", "--f", "1"][..],
        &["gen", "--ideal", "J", "--f", "4", "--char", "6"],
        &["gen", "--ideal", "Ilambda", "--f", "4"],
        &["gen", "--ideal", "J", "--f", "4", "--bogus"],
        &["frobnicate"],
        &["verify", "--suite", "nonsense"],
    ] {
        assert_eq!(pfaffkit(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let pass = pfaffkit(&["verify", "--suite", "grades", "--f", "4", "--char", "32003"]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(stdout(&pass).contains("PASS"));
    let incomplete = pfaffkit(&["verify", "--suite", "grades", "--f", "4", "--char", "32003", "--budget-seconds", "0"]);
    assert_eq!(incomplete.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "--suite", "exterior-identities", "--f", "4", "--char", "32003", "--seed", "7", "--format", "json"];
    let a = pfaffkit(&args);
    let b = pfaffkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["status"], "pass");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c.get("millis").is_none()));
}

fn report_in(dir: &Path) -> bool {
    dir.join("verify-grades.txt").is_file()
}

#[test]
fn output_dir_precedence() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let base = ["verify", "--suite", "grades", "--f", "4", "--char", "32003"];
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_pfaffkit"))
            .args(base)
            .args(extra)
            .env("PFAFFKIT_OUTPUT_DIR", env_dir.path())
            .output()
            .unwrap()
    };
    assert!(run(&[]).status.success());
    assert!(report_in(env_dir.path()));
    std::fs::remove_file(env_dir.path().join("verify-grades.txt")).unwrap();
    assert!(run(&["--output-dir", flag_dir.path().to_str().unwrap()]).status.success());
    assert!(report_in(flag_dir.path()));
    assert!(!report_in(env_dir.path()));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("reports");
    let cfg = dir.path().join("pfaffkit.conf");
    std::fs::write(
        &cfg,
        format!("# grid\nf = 4\nchar = 32003\nformat = json\noutput_dir = {}\n", out_dir.display()),
    )
    .unwrap();
    let out = pfaffkit(&["--config", cfg.to_str().unwrap(), "verify", "--suite", "grades"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["grid"]["f"], serde_json::json!([4]));
    assert!(out_dir.join("verify-grades.json").is_file());
}

#[test]
fn cas_files_round_trip_through_codim() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("j.txt");
    let gen = pfaffkit(&["gen", "--ideal", "J", "--f", "4", "--char", "32003", "--format", "cas"]);
    assert!(stdout(&gen).starts_with("ring: ZZ/32003[x_(1,2), "));
    std::fs::write(&file, &gen.stdout).unwrap();
    let from = pfaffkit(&["codim", "--from", file.to_str().unwrap()]);
    let direct = pfaffkit(&["codim", "--ideal", "J", "--f", "4", "--char", "32003"]);
    assert!(from.status.success());
    assert_eq!(json(&from), json(&direct));
}

#[test]
fn resolve_reports_betti_numbers() {
    let out = pfaffkit(&["resolve", "--module", "RJ", "--f", "4", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let mut totals = [0u64; 4];
    for e in v["betti"].as_array().unwrap() {
        totals[e["i"].as_u64().unwrap() as usize] += e["count"].as_u64().unwrap();
    }
    assert_eq!(totals, [1, 5, 5, 1]);
}

#[test]
fn export_json_parses() {
    let out = pfaffkit(&["export", "--complex", "seq43", "--f", "4", "--format", "json"]);
    assert!(out.status.success());
    json(&out);
    let text = pfaffkit(&["export", "--map", "d1", "--f", "3"]);
    assert!(stdout(&text).starts_with("ring: QQ["));
}

#[test]
fn help_lists_suites() {
    let out = pfaffkit(&["verify", "--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for suite in ["exterior-identities", "complex-closure", "grades", "exactness", "resolutions", "gorenstein", "localization", "char-anomaly"] {
        assert!(text.contains(suite), "{suite}");
    }
}
