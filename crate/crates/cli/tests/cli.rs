use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinhecke")).args(args).output().expect("spawn spinhecke")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn char_table_formats() {
    let out = run(&["char-table", "--n", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["n"], 2);
    assert_eq!(json["rows"][0]["lambda"], "2");
    assert_eq!(json["rows"][0]["values"]["1,1"], "4");

    let out = run(&["char-table", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "lambda,\"1,1\"\n2,4\n");
}

#[test]
fn char_table_with_more_variables_agrees() {
    let a = run(&["char-table", "--n", "3"]);
    let b = run(&["char-table", "--n", "3", "--m", "5"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn trace_and_class_polynomials() {
    assert_eq!(stdout(&run(&["gimel", "--n", "2", "--element", "T1"])), "(v-1)/2\n");
    assert_eq!(stdout(&run(&["gimel", "--n", "2", "--element", "T1*c1 + 1"])), "1\n");
    let out = run(&["class-poly", "--n", "2", "--element", "T1"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["1,1"], "(v-1)/2");
    let out = run(&["class-poly", "--n", "2", "--element", "T1", "--format", "csv"]);
    assert_eq!(stdout(&out), "nu,value\n\"1,1\",(v-1)/2\n");
}

#[test]
fn spin_commands() {
    let out = run(&["spin-class-poly", "--n", "3", "--word", "1,2"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["3"], "1");
    assert_eq!(json["1,1,1"], "0");
    let out = run(&["schur-elements", "--n", "2", "--spin"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["2"], "1");
}

#[test]
fn degrees_and_schur_elements() {
    let out = run(&["generic-degrees", "--n", "3"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["3"], "2*v^3+2*v^2+2*v+2");
    assert_eq!(json["2,1"], "2*v^2+2*v");
    let out = run(&["schur-elements", "--n", "2"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["2"], "2");
}

#[test]
fn verify_reports_and_exits_zero() {
    let out = run(&["verify", "--n", "2", "--suite", "spin"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() > 0);
    assert!(text.trim_end().ends_with("0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gimel", "--n", "2", "--element", "T3"][..],
        &["gimel", "--n", "2", "--spin"],
        &["class-poly", "--n", "0", "--element", "1"],
        &["class-poly", "--n", "2", "--element", "T1 +"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_spinhecke"))
        .args(["generic-degrees", "--n", "2"])
        .env("SPINHECKE_THREADS", "x")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let one = Command::new(env!("CARGO_BIN_EXE_spinhecke"))
        .args(["char-table", "--n", "4"])
        .env("SPINHECKE_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_spinhecke"))
        .args(["char-table", "--n", "4"])
        .env("SPINHECKE_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}
