use std::process::{Command, Output};

use serde_json::Value;

fn classgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classgen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn certify_sp6_over_gf2() {
    let out = classgen(&["certify", "--family", "sp6", "--q", "2", "--a", "1", "--seed", "7", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"]["computed"], "1451520");
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["seed"], 7);
}

#[test]
fn certificate_json_schema() {
    let out = classgen(&["certify", "--family", "o7-3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for key in ["family", "q", "p", "n", "modulus", "a", "b", "checks", "order", "seed", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert!(["pass", "fail", "skipped"].contains(&c["verdict"].as_str().unwrap()));
        assert!(c.get("details").is_some());
    }
    assert_eq!(v["order"]["expected"], "4585351680");
}

#[test]
fn text_mode_lines() {
    let out = classgen(&["certify", "--family", "su7-4", "--text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("CHECK element_order_43: PASS"));
    assert!(text.lines().filter(|l| l.starts_with("CHECK ")).all(|l| l.contains(": PASS") || l.contains(": FAIL") || l.contains(": SKIP")));
}

#[test]
fn failing_check_exits_one() {
    let out = classgen(&["certify", "--family", "o7", "--q", "7", "--a", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("CHECK conditions: FAIL"));
    let out = classgen(&["conditions", "--family", "o7", "--q", "7", "--a", "2"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn keep_going_runs_every_check() {
    let out = classgen(&["certify", "--family", "sp6", "--q", "4", "--a", "1", "--keep-going", "--no-generation", "--json"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["field_generation"]);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "g2_coefficients"));
}

#[test]
fn precondition_violations_exit_two() {
    assert_eq!(code(&classgen(&["certify", "--family", "u7", "--q", "5", "--a", "3"])), 2);
    assert_eq!(code(&classgen(&["certify", "--family", "sp6", "--q", "3", "--a", "1"])), 2);
    assert_eq!(code(&classgen(&["certify", "--family", "o7", "--q", "6"])), 2);
    assert_eq!(code(&classgen(&["build", "--family", "sp6", "--q", "4", "--a", "0"])), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&classgen(&[])), 2);
    assert_eq!(code(&classgen(&["certify", "--family", "g2"])), 2);
    assert_eq!(code(&classgen(&["certify", "--family", "sp6", "--q", "2", "--field", "2"])), 2);
    assert_eq!(code(&classgen(&["certify", "--family", "sp6"])), 2);
    assert_eq!(code(&classgen(&["sweep", "--qmax", "x"])), 2);
}

#[test]
fn table_reports_eight_rows() {
    let out = classgen(&["table", "--json"]);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    let qs: Vec<u64> = rows.iter().map(|r| r["q"].as_u64().unwrap()).collect();
    assert_eq!(qs, [3, 4, 5, 7, 8, 9, 11, 13]);
    // The listed polynomial for q = 3, 13 is reducible, so the table does not fully pass.
    let failing: Vec<u64> = rows.iter().filter(|r| r["passed"] == false).map(|r| r["q"].as_u64().unwrap()).collect();
    assert_eq!(failing, [3, 13]);
    assert_eq!(code(&out), 1);
}

#[test]
fn explicit_field_specification() {
    // a = t with minimum polynomial t^2 - t + 2 over GF(3).
    let out = classgen(&["certify", "--family", "u7", "--field", "3^2/2,-1,1", "--a", "0,1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["modulus"], serde_json::json!([2, 2, 1]));
    assert_eq!(v["q"], 3);
}

#[test]
fn search_and_not_found() {
    let out = classgen(&["search", "--family", "o7", "--q", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a = 3\n");
    let out = classgen(&["search", "--family", "u7", "--q", "2"]);
    assert_eq!(code(&out), 1);
    let out = classgen(&["search", "--family", "u7", "--q", "3", "--strategy", "exhaustive", "--json"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["a"].is_string());
}

#[test]
fn sweep_passes() {
    let out = classgen(&["sweep", "--qmax", "9"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("CHECK o7: Wall determinant"));
}

#[test]
fn enumerate_counts_sp6_over_gf2() {
    let out = classgen(&["enumerate", "--family", "sp6", "--q", "2", "--a", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "order 1451520\n");
    let out = classgen(&["enumerate", "--family", "sp6", "--q", "4", "--a", "0,1", "--cap", "100"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn build_and_output_file() {
    let dir = std::env::temp_dir().join(format!("classgen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    let out = classgen(&["build", "--family", "o7", "--q", "7", "--a", "3", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["x"].as_array().unwrap().len(), 7);
    assert_eq!(v["a"], "3");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn certificates_reproducible_modulo_timestamp() {
    let run = || {
        let mut v = json(&classgen(&["certify", "--family", "sp6", "--q", "4", "--a", "0,1", "--json"]));
        v.as_object_mut().unwrap().remove("timestamp");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}
