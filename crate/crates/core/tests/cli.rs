use std::path::PathBuf;
use std::process::Command;

use bipolar_choice::cli::{run, CommandOutput, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn bipolar(args: &[&str]) -> CommandOutput {
    run(std::iter::once("bipolar").chain(args.iter().copied()))
}

fn json(out: &CommandOutput) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn validate_luc() {
    let out = bipolar(&["--json", "validate", &fixture("luc.json")]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["arguments"], 7);
    assert_eq!(v["options"].as_array().unwrap().len(), 2);
}

#[test]
fn validate_rejects_malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        "{\n  \"scale\": [\"zero\", \"one\"],\n  \"arguments\": [\n",
    )
    .unwrap();
    let out = bipolar(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("parse error at line"), "{}", out.stderr);
}

#[test]
fn validate_rejects_trivial_universe() {
    let out = bipolar(&["validate", &fixture("trivial.json")]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("trivial"));
}

#[test]
fn validate_rejects_duplicate_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.json");
    std::fs::write(
        &path,
        r#"{"scale":["0","1"],"arguments":[{"name":"x","polarity":"pro","level":"1"},{"name":"x","polarity":"con","level":"1"}]}"#,
    )
    .unwrap();
    let out = bipolar(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("duplicate argument name"));
}

#[test]
fn compare_luc_all_rules() {
    let out = bipolar(&["--json", "compare", &fixture("luc.json"), "--all", "a", "b"]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    let expected = [
        ("Pareto", "PreferFirst"),
        ("BiPoss", "Indifferent"),
        ("Impl", "PreferFirst"),
        ("Discri", "Indifferent"),
        ("BiLexi", "Incomparable"),
        ("Lexi", "PreferSecond"),
    ];
    for (rule, outcome) in expected {
        assert_eq!(v["outcomes"][rule], outcome, "{rule}");
    }
    let table = bipolar(&["compare", &fixture("luc.json"), "--all", "a", "b"]);
    assert_eq!(table.stdout.lines().count(), 6);
    assert!(table.stdout.contains("BiLexi: Incomparable"));
}

#[test]
fn compare_single_rules() {
    let out = bipolar(&[
        "compare",
        &fixture("lucy.json"),
        "--rule",
        "biposs",
        "a",
        "home",
    ]);
    assert!(out.stdout.contains("PreferFirst"), "{}", out.stdout);
    let out = bipolar(&["compare", &fixture("luc.json"), "--rule", "lexi", "a", "a"]);
    assert!(out.stdout.contains("Indifferent"));
}

#[test]
fn compare_reports_unknown_names() {
    let out = bipolar(&["compare", &fixture("luc.json"), "--rule", "lexi", "a", "c"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("unknown option `c`"));
    let out = bipolar(&[
        "compare",
        &fixture("luc.json"),
        "--rule",
        "maxmin",
        "a",
        "b",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("maxmin"));
}

#[test]
fn compare_on_trivial_file_warns_and_ties() {
    let out = bipolar(&["compare", &fixture("trivial.json"), "--all", "a", "b"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("warning"));
    assert_eq!(out.stdout.matches("Indifferent").count(), 6);
    let quiet = bipolar(&[
        "--quiet",
        "compare",
        &fixture("trivial.json"),
        "--all",
        "a",
        "b",
    ]);
    assert!(quiet.stderr.is_empty() && quiet.stdout.is_empty());
}

#[test]
fn rank_maximal_sets() {
    let v = json(&bipolar(&[
        "--json",
        "rank",
        &fixture("luka.json"),
        "--rule",
        "discri",
    ]));
    assert_eq!(v["maximal"], serde_json::json!(["b"]));
    assert!(v["cycle"].is_null());
    let v = json(&bipolar(&[
        "--json",
        "rank",
        &fixture("luc.json"),
        "--rule",
        "bilexi",
    ]));
    assert_eq!(v["maximal"], serde_json::json!(["a", "b"]));
    assert_eq!(v["matrix"][0][1], "Incomparable");
    assert_eq!(v["matrix"][1][0], "Incomparable");
}

#[test]
fn rank_single_option() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.json");
    std::fs::write(
        &path,
        r#"{"scale":["0","1"],"arguments":[{"name":"x","polarity":"pro","level":"1"}],"options":{"only":["x"]}}"#,
    )
    .unwrap();
    let v = json(&bipolar(&[
        "--json",
        "rank",
        path.to_str().unwrap(),
        "--rule",
        "lexi",
    ]));
    assert_eq!(v["maximal"], serde_json::json!(["only"]));
}

#[test]
fn rank_matrix_is_mirror_consistent() {
    let v = json(&bipolar(&[
        "--json",
        "rank",
        &fixture("chocolate.json"),
        "--rule",
        "discri",
    ]));
    let m = v["matrix"].as_array().unwrap();
    fn mirror(s: &str) -> &str {
        match s {
            "PreferFirst" => "PreferSecond",
            "PreferSecond" => "PreferFirst",
            other => other,
        }
    }
    for (i, row) in m.iter().enumerate() {
        for (j, cell) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(cell.as_str().map(mirror), m[j][i].as_str());
        }
    }
}

#[test]
fn audit_theorem1_for_biposs_passes() {
    let out = bipolar(&[
        "--json",
        "audit",
        "--generate",
        "|X|=4,|L|=3",
        "--bundle",
        "theorem1",
        "--rule",
        "biposs",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r["holds"] == true));
}

#[test]
fn audit_prefindependence_fails_for_biposs_on_luc() {
    let out = bipolar(&[
        "--json",
        "audit",
        &fixture("luc.json"),
        "--axiom",
        "prefindependence",
        "--rule",
        "biposs",
    ]);
    // not a guaranteed property of BiPoss, so the exit status stays 0
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["rows"][0]["holds"], false);
    let witness = v["rows"][0]["witness"].as_str().unwrap();
    assert!(witness.contains("landscape_pp"), "{witness}");
    let table = bipolar(&[
        "audit",
        &fixture("luc.json"),
        "--axiom",
        "prefindependence",
        "--rule",
        "biposs",
    ]);
    assert!(table.stdout.contains('✗'));
}

#[test]
fn audit_propositions_bundle() {
    let out = bipolar(&[
        "--json",
        "audit",
        "--generate",
        "|X|=4,|L|=3",
        "--bundle",
        "propositions",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    let checks = v["propositions"].as_array().unwrap();
    assert!(checks.len() >= 9);
    assert!(checks.iter().all(|c| c["holds"] == true));
}

#[test]
fn audit_reports_oversized_universe() {
    let out = bipolar(&[
        "audit",
        &fixture("luc.json"),
        "--axiom",
        "gclo",
        "--rule",
        "biposs",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("enumeration bound"));
}

#[test]
fn ttb_commands() {
    let out = bipolar(&[
        "--json",
        "ttb",
        &fixture("ttb_three_cues.json"),
        "option1",
        "option2",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["ttb"], "PreferFirst");
    assert_eq!(v["coincide"], true);
    let out = bipolar(&["ttb", &fixture("luc.json"), "a", "b"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("not pairwise distinct"));
}

#[test]
fn capacities_of_luc() {
    let v = json(&bipolar(&["--json", "capacities", &fixture("luc.json")]));
    assert_eq!(v["base"], "15");
    assert_eq!(v["rows"][0]["net_predisposition"], "-225");
    assert_eq!(v["rows"][1]["net_predisposition"], "-180");
    assert_eq!(v["rows"][1]["sigma_pos"], "45");
}

#[test]
fn json_carries_no_superscripts() {
    for args in [
        vec![
            "--json",
            "audit",
            &*fixture("luc.json"),
            "--axiom",
            "prefindependence",
            "--rule",
            "biposs",
        ],
        vec!["--json", "validate", &*fixture("luc.json")],
    ] {
        let out = bipolar(&args);
        assert!(!out.stdout.contains(['⁺', '⁻']), "{}", out.stdout);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bipolar");
    let ok = Command::new(bin)
        .args(["validate", &fixture("luc.json")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("7 arguments"));
    let bad = Command::new(bin)
        .args(["validate", &fixture("missing.json")])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let usage = Command::new(bin).args(["compare"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    assert_ne!(EXIT_CHECK_FAILED, EXIT_USAGE);
}
