//! End-to-end runs of the command-line entry point through `cli::run_with`,
//! covering the catalog listing, sweep selection, output formats and
//! destinations, config files, and all three exit codes.

use fqlab::cli::run_with;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(args.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn catalog_lists_every_family_with_its_parameter_schema() {
    let (code, out, err) = run(&["verify", "list-families"]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 21);
    let prop1 = lines.iter().find(|l| l.starts_with("prop1")).unwrap();
    assert!(prop1.contains(" p "), "prop1 schema is the prime alone: {prop1}");
    let mneimneh = lines.iter().find(|l| l.starts_with("mneimneh")).unwrap();
    assert!(mneimneh.contains("n,r"), "mneimneh schema: {mneimneh}");
}

#[test]
fn failing_cell_yields_exit_one_and_a_single_failing_record() {
    let (code, out, err) = run(&[
        "verify",
        "--families",
        "prop1",
        "--primes",
        "3:101",
        "--backend",
        "both",
    ]);
    assert_eq!(code, 1);
    assert!(err.is_empty());
    let failing: Vec<Value> = out
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .filter(|v: &Value| v["pass"] == Value::Bool(false))
        .collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["params"]["p"], 3);
    assert_eq!(failing[0]["modulus"], 9);

    // Starting one prime later removes the only counterexample.
    let (code, _, _) = run(&["verify", "--families", "prop1", "--primes", "5:101"]);
    assert_eq!(code, 0);
}

#[test]
fn json_records_carry_the_full_schema() {
    let (code, out, _) = run(&[
        "verify",
        "--families",
        "eisenstein",
        "--primes",
        "3:31",
        "--backend",
        "both",
        "--format",
        "json-lines",
    ]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    for line in out.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        for key in ["family", "params", "modulus", "lhs", "rhs", "pass", "backend"] {
            assert!(v.get(key).is_some(), "missing {key} in {line}");
        }
        assert_eq!(v["backend"], "both");
        assert_eq!(v["agree"], Value::Bool(true));
    }
}

#[test]
fn domain_rows_are_tolerated_only_on_request() {
    let (code, out, _) = run(&["verify", "--families", "wolstenholme", "--primes", "3:3"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["pass"], Value::Bool(false));
    assert!(v["error"].as_str().unwrap().contains("p > 3"));

    let (code, _, _) = run(&[
        "verify",
        "--families",
        "wolstenholme",
        "--primes",
        "3:3",
        "--allow-domain-errors",
    ]);
    assert_eq!(code, 0);

    // A genuine failure is never tolerated by the domain flag.
    let (code, _, _) = run(&[
        "verify",
        "--families",
        "prop1",
        "--primes",
        "3:3",
        "--allow-domain-errors",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two_with_a_message() {
    let (code, _, err) = run(&["verify", "--families", "no-such-family"]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-family"));
    assert!(err.contains("list-families"));

    let (code, _, err) = run(&["verify", "--primes", "10:3"]);
    assert_eq!(code, 2);
    assert!(err.contains("empty"));

    let (code, _, _) = run(&["verify", "--format", "yaml"]);
    assert_eq!(code, 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "verify",
        "--families",
        "eisenstein,lemma1,dsum-closed",
        "--primes",
        "3:37",
        "--n-range",
        "1:8",
        "--backend",
        "both",
    ];
    let (code_a, out_a, _) = run(&args);
    let (code_b, out_b, _) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert!(!out_a.is_empty());
    assert_eq!(out_a, out_b);
}

#[test]
fn out_flag_writes_the_stream_to_a_file() {
    let path = std::env::temp_dir().join(format!("fqlab-out-test-{}.jsonl", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "verify",
        "--families",
        "eisenstein",
        "--primes",
        "3:13",
        "--out",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty(), "the stream goes to the file, not stdout");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 5);
    std::fs::remove_file(&path).ok();

    let (code, _, err) = run(&[
        "verify",
        "--families",
        "eisenstein",
        "--primes",
        "3:13",
        "--out",
        "/nonexistent-dir/report.jsonl",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write"));
}

#[test]
fn config_file_drives_the_sweep_and_flags_override_it() {
    let path = std::env::temp_dir().join(format!("fqlab-cfg-test-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{
            "families": ["wolstenholme"],
            "primes": "5:31",
            "backend": "modular",
            "format": "csv"
        }"#,
    )
    .unwrap();
    let path_str = path.to_str().unwrap();

    let (code, out, _) = run(&["verify", "--config", path_str]);
    assert_eq!(code, 0);
    assert!(out.starts_with("family,params,modulus,lhs,rhs,pass,backend,agree,error"));
    assert_eq!(out.lines().count(), 1 + 9);

    let (code, out, _) = run(&["verify", "--config", path_str, "--format", "summary"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("wolstenholme: 9 checks, 9 pass"));

    let (code, _, err) = run(&["verify", "--config", "/no/such/config.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read config file"));

    std::fs::remove_file(&path).ok();
}
