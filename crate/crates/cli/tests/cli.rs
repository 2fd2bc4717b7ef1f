use std::process::{Command, Output};

fn z3calc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z3calc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reduce_h_plane_example() {
    let o = z3calc(&["reduce", "--preset", "h_plane", "x*th"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "th*x + h*x*x\n");
}

#[test]
fn reduce_specialized_calculus_example() {
    let o = z3calc(&["reduce", "--preset", "qjh_calculus", "--q", "1", "th*dx"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "j*dx*th - j^2*h*dx*x\n");
}

#[test]
fn reduce_unicode_and_latex() {
    let o = z3calc(&["reduce", "--preset", "h_plane", "--unicode", "x*th"]);
    assert_eq!(stdout(&o), "θ·x + h·x·x\n");
    let o = z3calc(&["reduce", "--preset", "h_plane", "--format", "latex", "x*th"]);
    assert_eq!(stdout(&o), "\\theta \\, x + h \\, x \\, x\n");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["reduce", "--preset", "qjh_calculus", "--format", "json", "x*th*dx*dth"];
    let a = stdout(&z3calc(&args));
    let b = stdout(&z3calc(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["preset"], "qjh_calculus");
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_preset_and_suite_exit_2() {
    assert_eq!(z3calc(&["reduce", "--preset", "nope", "x"]).status.code(), Some(2));
    assert_eq!(z3calc(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(z3calc(&["supergroup", "--check", "nope"]).status.code(), Some(2));
}

#[test]
fn parse_error_exits_2_with_offset() {
    let o = z3calc(&["reduce", "--preset", "h_plane", "x*("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));
}

#[test]
fn exhausted_budget_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_z3calc"))
        .args(["reduce", "--preset", "qjh_calculus", "x*x*x*th*th"])
        .env("Z3CALC_STEP_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn passing_suite_exits_0_and_failing_suite_exits_1() {
    let o = z3calc(&["verify", "--suite", "thm3_2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
    assert_eq!(z3calc(&["verify", "--suite", "cartan"]).status.code(), Some(1));
}

#[test]
fn presets_export_import_round_trip() {
    let exported = stdout(&z3calc(&["presets", "export", "glhj"]));
    let path = std::env::temp_dir().join(format!("z3calc-glhj-{}.json", std::process::id()));
    std::fs::write(&path, &exported).unwrap();
    let o = z3calc(&["presets", "import", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), exported);
}

#[test]
fn presets_list_names_rule_counts() {
    let out = stdout(&z3calc(&["presets", "list"]));
    assert_eq!(out.lines().count(), 13);
    assert!(out.contains("h_plane\t3 rules"));
}

#[test]
fn pairs_reports_census() {
    let o = z3calc(&["pairs", "--preset", "qjh_calculus"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pairs"], 59);
    assert_eq!(v["non_joinable"].as_array().unwrap().len(), 9);
}

#[test]
fn sdet_json_has_terms() {
    let o = z3calc(&["sdet", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"][0]["word"], "dTinv*a");
}
