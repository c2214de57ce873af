use std::io::Write;
use std::process::{Command, Output};

fn bellforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellforge"))
        .args(args)
        .env_remove("BELLFORGE_FAA_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Second CSV column, header dropped.
fn values(out: &Output) -> Vec<String> {
    stdout(out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect()
}

fn spec_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn seq_partition_numbers() {
    let out = bellforge(&["seq", "p", "--max", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("n,value\n0,1\n"));
    assert_eq!(values(&out), ["1", "1", "2", "3", "5", "7"]);
}

#[test]
fn seq_psi_star_is_triangular_indicator() {
    let out = bellforge(&["seq", "psi-star", "--max", "6"]);
    assert_eq!(values(&out), ["1", "1", "0", "1", "0", "0", "1"]);
}

#[test]
fn seq_restricted_parts() {
    let out = bellforge(&["seq", "w", "--parts", "1,2", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(values(&out), ["1", "1", "2", "2", "3"]);
}

#[test]
fn seq_methods_agree_and_json_parses() {
    let auto = values(&bellforge(&["seq", "cubic", "--max", "20"]));
    let series = values(&bellforge(&["seq", "cubic", "--max", "20", "--method", "series"]));
    assert_eq!(auto, series);
    assert_eq!(auto[3], "4");

    let out = bellforge(&["seq", "overcubic", "--max", "4", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["name"], "overcubic");
    assert_eq!(json["values"][2][1], "6");
}

#[test]
fn seq_usage_errors_exit_2() {
    for args in [
        &["seq", "q", "--max", "3"][..],
        &["seq", "w", "--max", "3"],
        &["seq", "w", "--parts", "1,x", "--max", "3"],
        &["seq", "w", "--parts", "0,2", "--max", "3"],
        &["seq", "w", "--parts", "2,2", "--max", "3"],
        &["seq", "p", "--parts", "2", "--max", "3"],
        &["seq", "p"],
        &["seq", "p", "--max", "70", "--method", "faa"],
    ] {
        assert_eq!(bellforge(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_both_on_euler_product() {
    let spec = spec_file(
        r#"{"numerator":[],"denominator":[{"support":{"kind":"all"},"z":"1","a":1}]}"#,
    );
    let path = spec.path().to_str().unwrap();
    let out = bellforge(&["eval", "--spec", path, "--max", "10", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,faa,series,agree\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    assert_eq!(text.lines().last().unwrap(), "10,42,42,true");
}

#[test]
fn eval_geometric_series() {
    let spec = spec_file(
        r#"{"numerator":[{"support":{"kind":"finite","set":[1]},"z":"1/2","a":-1}]}"#,
    );
    let path = spec.path().to_str().unwrap();
    for method in ["faa", "series"] {
        let out = bellforge(&["eval", "--spec", path, "--max", "3", "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(values(&out), ["1", "1/2", "1/4", "1/8"]);
    }
}

#[test]
fn eval_rejects_bad_specs() {
    for json in [
        r#"{"denominator":[{"support":{"kind":"all"},"z":"1","a":0}]}"#,
        r#"{"denominator":[{"support":{"kind":"all"},"z":"0.5","a":1}]}"#,
        r#"{"denominator":[{"support":{"kind":"multiples","r":0},"z":"1","a":1}]}"#,
        r#"{"denominator":[{"support":{"kind":"finite","set":[]},"z":"1","a":1}]}"#,
        r#"{"denominator": nope}"#,
    ] {
        let spec = spec_file(json);
        let out = bellforge(&["eval", "--spec", spec.path().to_str().unwrap(), "--max", "3"]);
        assert_eq!(out.status.code(), Some(2), "{json}");
    }
    let out = bellforge(&["eval", "--spec", "/nonexistent/spec.json", "--max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_chan() {
    let out = bellforge(&["verify", "chan", "--max", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 16);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_theta() {
    let out = bellforge(&["verify", "theta", "--max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("theta: 202 checks, 0 failed\n"));
}

#[test]
fn verify_euler() {
    let out = bellforge(&["verify", "euler", "--max", "60"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS euler n=60: partition_sum=966467"));
}

#[test]
fn verify_every_identity_small() {
    for identity in [
        "reciprocal",
        "euler",
        "sigma",
        "chan",
        "kim",
        "additivity-index",
        "additivity-set",
        "restricted-recursion",
        "theta",
    ] {
        let out = bellforge(&["verify", identity, "--max", "8", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{identity}");
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(json["verdicts"].as_array().unwrap().iter().all(|v| v["pass"] == true));
    }
}

#[test]
fn verify_usage_errors_exit_2() {
    assert_eq!(bellforge(&["verify", "nope", "--max", "3"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_bellforge"))
        .args(["verify", "euler", "--max", "12"])
        .env("BELLFORGE_FAA_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let garbage = Command::new(env!("CARGO_BIN_EXE_bellforge"))
        .args(["verify", "euler", "--max", "3"])
        .env("BELLFORGE_FAA_CAP", "ten")
        .output()
        .unwrap();
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn cap_env_var_raises_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_bellforge"))
        .args(["seq", "p", "--max", "62", "--method", "faa"])
        .env("BELLFORGE_FAA_CAP", "62")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(values(&out).last().unwrap(), "1300156");
}

#[test]
fn bench_agrees() {
    let out = bellforge(&["bench", "--max", "30", "--repeat", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n_from,n_to,p_n_to,partition_sum_us,pentagonal_us,series_us,agree"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert!(rows[3].starts_with("30,30,5604,"));
}

#[test]
fn bench_trivial_and_capped() {
    let out = bellforge(&["bench", "--max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("0,0,1,") && row.ends_with(",true"), "{row}");
    assert_eq!(bellforge(&["bench", "--max", "61"]).status.code(), Some(2));
}

#[test]
fn errata_report_formats() {
    let out = bellforge(&["errata", "--max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("a(n)"));
    let out = bellforge(&["errata", "--max", "5", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["formulas"].as_array().unwrap().len(), 6);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["seq", "phi-star", "--max", "30", "--format", "json"][..],
        &["verify", "additivity-set", "--max", "6"],
        &["errata", "--max", "8"],
    ] {
        assert_eq!(bellforge(args).stdout, bellforge(args).stdout, "{args:?}");
    }
}

#[test]
fn missing_arguments_exit_2() {
    assert_eq!(bellforge(&[]).status.code(), Some(2));
    assert_eq!(bellforge(&["eval", "--max", "3"]).status.code(), Some(2));
    assert_eq!(bellforge(&["seq", "p", "--max", "-1"]).status.code(), Some(2));
}
