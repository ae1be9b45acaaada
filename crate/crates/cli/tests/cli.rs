use std::process::{Command, Output};

fn veronese(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veronese"))
        .args(args)
        .output()
        .expect("spawn veronese")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mingens_json_for_complement() {
    let o = veronese(&["--json", "mingens", "complement(2,4; x0^2*x1^2)"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["table"]["degrees"]["2"], 60);
    assert_eq!(v["table"]["degrees"]["3"], 3);
}

#[test]
fn bare_group_is_degree_one_invariants() {
    let o = veronese(&["--json", "omega", "C(4;0,1,2,3)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 10);
}

#[test]
fn gb_under_degrevlex_is_quadratic_for_veronese_surface() {
    let o = veronese(&["gb", "veronese(2,2)"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# order degrevlex"));
    assert!(text.contains("max degree 2"));
}

#[test]
fn gb_search_reports_impossible_for_non_quadratic() {
    let o = veronese(&["--json", "gb-search", "C(5;0,1,2)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["proved_impossible"], true);
}

#[test]
fn passing_and_failing_scenarios_set_exit_code() {
    assert_eq!(
        veronese(&["scenario", "complement-2-4"]).status.code(),
        Some(0)
    );
    assert_eq!(
        veronese(&["scenario", "h-vector-4-0123"]).status.code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        veronese(&["scenario", "no-such-scenario"]).status.code(),
        Some(2)
    );
    assert_eq!(veronese(&["mingens", "veronese(2"]).status.code(), Some(2));
    assert_eq!(veronese(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn guard_trip_exits_three() {
    let o = veronese(&["--guard", "10", "mingens", "veronese(3,4)"]);
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn hvec_routes_agree() {
    let o = veronese(&["--json", "hvec", "C(4;0,1,2,3)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["h_vector"], serde_json::json!([1, 6, 9, 0]));
}

#[test]
fn normal2_witness_check() {
    let o = veronese(&[
        "--json",
        "normal2",
        "pv(3,5,2)",
        "--witness",
        "x0^2*x1^2*x2^2*x3^4",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_2_normal"], false);
    assert_eq!(v["checked_witness"], true);
}

#[test]
fn survey_writes_jsonl_and_csv_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.jsonl");
    let out_s = out.to_str().unwrap();
    let run = || {
        veronese(&[
            "--out", out_s, "survey", "--n", "2", "--d-min", "2", "--d-max", "6",
        ])
    };
    assert!(run().status.success());
    let first = std::fs::read_to_string(&out).unwrap();
    assert!(!first.is_empty());
    assert!(out.with_extension("csv").exists());
    assert!(run().status.success());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), first);
}

#[test]
fn lift_of_group_has_block_size() {
    let o = veronese(&["--json", "lift", "C(3;0,1,2)", "--sizes", "1,1,2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["size"], 8);
}
