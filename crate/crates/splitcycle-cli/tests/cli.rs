//! End-to-end runs of the binary: the worked four-candidate election, the
//! explicit-pair independence check, witness replay in both sourcing
//! modes, synthesis roundtrips, and the exit-code contract.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitcycle"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn synthesized_vote(dir: &tempfile::TempDir, graph: &str) -> PathBuf {
    let out = run(&["synth", fixture(graph).to_str().unwrap()]);
    assert!(out.status.success(), "synth failed: {out:?}");
    let path = dir.path().join("synth.vote");
    std::fs::File::create(&path)
        .unwrap()
        .write_all(&out.stdout)
        .unwrap();
    path
}

#[test]
fn tabulate_reproduces_the_four_candidate_election() {
    let dir = tempfile::tempdir().unwrap();
    let vote = synthesized_vote(&dir, "example6.graph.json");
    let out = run(&["tabulate", "--method", "split_cycle", vote.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    let entry = &json.as_array().expect("array of methods")[0];
    assert_eq!(entry["method"], "split_cycle");
    assert_eq!(entry["winners"], serde_json::json!(["a"]));
    let defeats: Vec<(String, String)> = entry["defeats"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["from"].as_str().unwrap().to_string(),
                e["to"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let expected: Vec<(String, String)> = [("a", "b"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    assert_eq!(defeats, expected);
}

#[test]
fn tabulate_runs_every_method_on_a_well_formed_file() {
    let vote = fixture("nine_voters.vote");
    let out = run(&["tabulate", vote.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let json = stdout_json(&out);
    let entries = json.as_array().unwrap();
    assert_eq!(entries.len(), 16);
    for entry in entries {
        assert!(entry["winners"].as_array().is_some(), "{entry}");
    }
}

#[test]
fn tabulate_flag_order_fixes_output_order() {
    let vote = fixture("nine_voters.vote");
    let out = run(&[
        "tabulate",
        "--method",
        "borda",
        "--method",
        "split_cycle",
        vote.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    let methods: Vec<&str> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, ["borda", "split_cycle"]);
}

#[test]
fn tabulate_table_is_human_readable() {
    let vote = fixture("nine_voters.vote");
    let out = run(&[
        "tabulate",
        "--method",
        "split_cycle",
        "--format",
        "table",
        vote.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("profile (9 voters):"), "{text}");
    assert!(text.contains("4: a > b > c"), "{text}");
    assert!(text.contains("margin a > b: 5"), "{text}");
    assert!(text.contains("defeat a -> b"), "{text}");
    assert!(text.contains("winners: a"), "{text}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let vote = fixture("nine_voters.vote");
    let first = run(&["tabulate", vote.to_str().unwrap()]);
    let second = run(&["tabulate", vote.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    let args = [
        "axioms",
        "--axiom",
        "neutral_reversal_up",
        "--method",
        "plurality",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..1",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn axioms_holds_exits_zero() {
    let out = run(&[
        "axioms",
        "--axiom",
        "availability",
        "--method",
        "split_cycle",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["status"], "holds_on_domain");
    assert!(json.get("witness").is_none());
}

#[test]
fn axioms_counterexample_exits_one_with_witness() {
    let out = run(&[
        "axioms",
        "--axiom",
        "neutral_reversal_up",
        "--method",
        "plurality",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout_json(&out);
    assert_eq!(json["status"], "counterexample");
    let witness = &json["witness"];
    assert_eq!(witness["profiles"].as_array().unwrap().len(), 2);
    assert_eq!(witness["detail"]["kind"], "reversal_pair");
}

#[test]
fn axioms_random_mode_is_seeded_and_checkable() {
    let args = [
        "axioms",
        "--axiom",
        "pareto",
        "--method",
        "split_cycle",
        "--domain-candidates",
        "a,b,c,d",
        "--domain-voters",
        "3..7",
        "--domain-mode",
        "random",
        "--samples",
        "50",
        "--seed",
        "7",
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0), "{first:?}");
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn axioms_over_explicit_pairs_finds_the_positional_flip() {
    let pairs = fixture("example12.pairs.json");
    let out = run(&[
        "axioms",
        "--axiom",
        "coherent_iia",
        "--method",
        "borda",
        "--candidates",
        "x,y,a,b,c",
        "--pairs-from",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["status"], "counterexample");
    assert_eq!(json["witness"]["candidates"], serde_json::json!(["x", "y"]));
    // the same pair does not trip split_cycle
    let out = run(&[
        "axioms",
        "--axiom",
        "coherent_iia",
        "--method",
        "split_cycle",
        "--candidates",
        "x,y,a,b,c",
        "--pairs-from",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn axioms_budget_paths_exit_three() {
    // the domain itself is over budget: diagnostic only, no verdict
    let out = run(&[
        "axioms",
        "--axiom",
        "availability",
        "--method",
        "borda",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..3",
        "--budget",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    // the scan runs out of instances mid-way: verdict with the status
    let out = run(&[
        "axioms",
        "--axiom",
        "coherent_iia",
        "--method",
        "split_cycle",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..3",
        "--budget",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["status"], "budget_exceeded");
}

#[test]
fn witness_builtin_passes_and_unknown_is_a_usage_error() {
    let out = run(&["witness", "example12_borda"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["passed"], true);
    assert!(!json["expectations"].as_array().unwrap().is_empty());
    let out = run(&["witness", "no_such_case"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witness_user_file_round_trips() {
    let out = run(&["witness", fixture("user_witness.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["case"], "positional flip");
    assert_eq!(json["passed"], true);
    assert_eq!(json["expectations"].as_array().unwrap().len(), 4);
}

#[test]
fn witness_failed_expectation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let text = std::fs::read_to_string(fixture("user_witness.json"))
        .unwrap()
        .replace(
            "{\"kind\": \"defeats\", \"profile\": \"P\", \"from\": \"x\", \"to\": \"y\", \"expected\": true}",
            "{\"kind\": \"defeats\", \"profile\": \"P\", \"from\": \"y\", \"to\": \"x\", \"expected\": true}",
        );
    std::fs::write(&path, text).unwrap();
    let out = run(&["witness", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["passed"], false);
}

#[test]
fn witness_table_format_prints_lines() {
    let out = run(&["witness", "--format", "table", "example6_split_cycle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("case example6_split_cycle"), "{text}");
    assert!(text.trim_end().ends_with("pass"), "{text}");
}

#[test]
fn synth_realizes_the_graph_and_export_inverts_it() {
    let dir = tempfile::tempdir().unwrap();
    let vote = synthesized_vote(&dir, "example6.graph.json");
    let out = run(&["export-dot", "--format", "json", vote.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let roundtrip = stdout_json(&out);
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("example6.graph.json")).unwrap())
            .unwrap();
    assert_eq!(roundtrip["nodes"], original["nodes"]);
    let canon = |v: &Value| {
        let mut edges: Vec<(String, String, i64)> = v["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e["from"].as_str().unwrap().to_string(),
                    e["to"].as_str().unwrap().to_string(),
                    e["weight"].as_i64().unwrap(),
                )
            })
            .collect();
        edges.sort();
        edges
    };
    assert_eq!(canon(&roundtrip), canon(&original));
}

#[test]
fn synth_rejects_odd_weights() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd.json");
    std::fs::write(
        &path,
        r#"{"nodes":["a","b"],"edges":[{"from":"a","to":"b","weight":3}]}"#,
    )
    .unwrap();
    let out = run(&["synth", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn export_dot_styles_defeats_distinctly() {
    let vote = fixture("nine_voters.vote");
    let plain = run(&["export-dot", vote.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(0));
    let text = String::from_utf8(plain.stdout).unwrap();
    assert!(text.starts_with("digraph margins {"), "{text}");
    assert!(!text.contains("style=bold"), "{text}");
    let overlaid = run(&[
        "export-dot",
        "--method",
        "split_cycle",
        vote.to_str().unwrap(),
    ]);
    let text = String::from_utf8(overlaid.stdout).unwrap();
    assert!(text.contains("style=bold"), "{text}");
}

#[test]
fn enumerate_reports_exact_counts() {
    let out = run(&[
        "enumerate",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "1..3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["profiles"], "83");
    assert_eq!(json["within_budget"], true);
    assert_eq!(json["per_voter_count"][2]["profiles"], "56");
    let out = run(&[
        "enumerate",
        "--domain-candidates",
        "a,b,c",
        "--domain-voters",
        "2..2",
        "--domain-mode",
        "sequence",
    ]);
    assert_eq!(stdout_json(&out)["profiles"], "36");
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(&["tabulate", "/no/such/file.vote"]).status.code(),
        Some(2)
    );
    let vote = fixture("nine_voters.vote");
    assert_eq!(
        run(&["tabulate", "--method", "not_a_method", vote.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "axioms",
            "--axiom",
            "not_an_axiom",
            "--method",
            "borda",
            "--domain-candidates",
            "a,b",
            "--domain-voters",
            "1..1",
        ])
        .status
        .code(),
        Some(2)
    );
    // availability is not a pair axiom, so explicit pairs are rejected
    let pairs = fixture("example12.pairs.json");
    let out = run(&[
        "axioms",
        "--axiom",
        "availability",
        "--method",
        "borda",
        "--pairs-from",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    // malformed ballot file
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.vote");
    std::fs::write(&bad, "candidates: a b\n1: a > a\n").unwrap();
    assert_eq!(run(&["tabulate", bad.to_str().unwrap()]).status.code(), Some(2));
}
