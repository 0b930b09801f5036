//! End-to-end tests of the `zeroconc` binary: output shapes, JSON exactness,
//! and exit codes (0 success, 1 negative verdict / corpus failure, 2 usage
//! or parse errors).

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn zeroconc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeroconc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn invariants_json_is_exact() {
    let out = zeroconc(&["--json", "invariants", "twistspin(2, twobridge(3,1))"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mu"], 14);
    assert_eq!(v["d_bar"], "1/2");
    assert_eq!(v["h1"], 3);
    assert_eq!(v["conditional"], false);
}

#[test]
fn invariants_unknown_cover_does_not_crash() {
    let out = zeroconc(&["--json", "invariants", "twistspin(7, twobridge(5,2))"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mu"], serde_json::Value::Null);
    assert_eq!(v["d_bar"], serde_json::Value::Null);
}

#[test]
fn compare_exit_codes() {
    let out = zeroconc(&["compare", "twistspin(2,twobridge(3,1)) :: unknot2"]);
    assert_eq!(code(&out), 0, "distinguished pair exits 0");
    assert!(stdout(&out).contains("distinguished"));

    let out = zeroconc(&["compare", "unknot2 :: ribbon(3)"]);
    assert_eq!(code(&out), 1, "unobstructed pair exits 1");
    assert!(stdout(&out).contains("not obstructed"));

    let out = zeroconc(&["compare", "unknot2"]);
    assert_eq!(code(&out), 2, "missing '::' is a usage error");
}

#[test]
fn compare_json_shape() {
    let out = zeroconc(&[
        "--json",
        "compare",
        "twistspin(2,twobridge(5,1)) :: twistspin(2,twobridge(7,1))",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "distinguished");
    let w: Vec<String> = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect();
    assert!(w.contains(&"d".to_string()));
    assert_eq!(v["left"]["d_bar"], "1");
    assert_eq!(v["right"]["d_bar"], "3/2");
}

#[test]
fn parse_errors_exit_2() {
    let out = zeroconc(&["invariants", "twistspin(2, torus(2,4))"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("coprime"), "stderr: {err}");

    let out = zeroconc(&["invariants", "twistspin(2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn dlens_values() {
    let out = zeroconc(&["dlens", "199", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("= 99/2"));

    let out = zeroconc(&["dlens", "3", "1", "1"]);
    assert!(stdout(&out).contains("= -1/6"));

    // Even p: both spin structures reported.
    let out = zeroconc(&["--json", "dlens", "2", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vals = v["values"].as_array().unwrap();
    assert_eq!(vals.len(), 2);
    assert_eq!(vals[0]["d"], "1/4");
    assert_eq!(vals[1]["d"], "-1/4");
}

#[test]
fn family_sizes() {
    let out = zeroconc(&["--json", "family", "d", "--size", "3"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[2]["d_bar"], "6");

    let out = zeroconc(&["family", "x", "--size", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn theorem2_report() {
    let out = zeroconc(&["--json", "theorem2", "torus(2,3)"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["sigma"], -2);
    assert_eq!(v["d"], "1/2");
    assert_eq!(v["c"], "-4");
    assert_eq!(v["relation_holds"], true);
    assert_eq!(v["obstructs_zero_slice"], true);

    // Unflagged raw knots are rejected.
    let out = zeroconc(&["theorem2", "unknot"]);
    assert_eq!(code(&out), 0);
    let out = zeroconc(&["theorem2", "nonsense("]);
    assert_eq!(code(&out), 2);
}

#[test]
fn raw_presentation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8.json");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(
        f,
        "{}",
        r#"{"framings":[2,2,2,2,2,2,2,2],"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[4,7]]}"#
    )
    .unwrap();
    drop(f);

    let out = zeroconc(&["--json", "mu", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["values"][0]["mu"], 8);

    // The boundary of the positive-definite E8 plumbing is the reversed
    // Poincare sphere: oracle value -2.
    let out = zeroconc(&["--json", "d-oracle", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["values"][0]["d"], "-2");

    // Explicit covector class.
    let lens = dir.path().join("l31.json");
    std::fs::write(&lens, r#"{"framings":[3],"edges":[]}"#).unwrap();
    let out = zeroconc(&["d-oracle", lens.to_str().unwrap(), "--covector", "1"]);
    assert!(stdout(&out).contains("-1/6"));

    // Indefinite presentations are rejected.
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"framings":[2,-2],"edges":[[0,1]]}"#).unwrap();
    let out = zeroconc(&["d-oracle", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corpus_pass_and_fail() {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/sample_corpus.jsonl");
    let out = zeroconc(&["corpus", sample.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    assert!(stdout(&out).contains("7 passed, 0 failed"));

    // A failing expectation and a malformed line are reported with line
    // numbers and flip the exit code.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    std::fs::write(
        &path,
        concat!(
            "{\"expr\": \"twistspin(5,torus(2,3))\", \"expected\": {\"d_bar\": \"3\"}}\n",
            "{\"expr\": \"unknot2\", \"expected\": {\"mu\": 0}}\n",
            "not json at all\n",
        ),
    )
    .unwrap();
    let out = zeroconc(&["corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("line   1: FAIL"), "{text}");
    assert!(text.contains("line   2: PASS"), "{text}");
    assert!(text.contains("line   3: FAIL"), "{text}");
    assert!(text.contains("1 passed, 2 failed"), "{text}");
}

#[test]
fn selftest_passes() {
    let out = zeroconc(&["selftest"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("all checks passed"));
    assert!(text.contains("c = -4"), "calibration constants printed");
}
