use std::process::{Command, Output};

fn ladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladder")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn plain_answers() {
    let out = ladder(&["regularize", "2,2,2,1,1,1", "--ell", "3", "--plain"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3,3,2,1\n");

    let out = ladder(&["jm", "count", "--core", "3,1", "--weight", "3", "--ell", "3", "--plain"]);
    assert_eq!(stdout(&out), "6\n");

    let out = ladder(&["mullineux", "2", "--plain"]);
    assert_eq!(stdout(&out), "1,1\n");
}

#[test]
fn json_answers() {
    let out = ladder(&["jm", "check", "3,1,1,1", "--ell", "3"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["is_jm"], false);
    assert_eq!(value["witness"]["colmate"]["row"], 3);

    let out = ladder(&["jm", "decompose", "15,10,8,6,2^5,1^5", "--ell", "3"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["decomposition"]["rho"], "2,1,1,1");
    assert_eq!(value["decomposition"]["sigma"], "2,1");
}

#[test]
fn suites_exit_zero_when_clean() {
    let out = ladder(&["suite", "--name", "golden"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["failures"], serde_json::json!([]));

    let out = ladder(&["crystal", "verify", "--ell", "4", "--depth", "6", "--plain"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn domain_and_usage_errors_exit_two() {
    for args in [
        &["core", "3,x"][..],
        &["core", "1,3"],
        &["mullineux", "1,1,1", "--ell", "3"],
        &["mullineux", "2", "--ell", "2"],
        &["jm", "decompose", "3,1,1,1", "--ell", "3"],
        &["info", "1", "--ell", "1"],
        &["nonsense"],
    ] {
        let out = ladder(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
