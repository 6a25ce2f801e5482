//! End-to-end checks of the `lexner` binary: every subcommand, plus
//! byte-level determinism of `postprocess` across thread counts.

mod common;

use common::gen_judgment;
use lexner::corpus::{export_corpus, AnnotationRecord};
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lexner"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn segment_emits_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("judgment.txt");
    std::fs::write(
        &path,
        "IN THE HIGH COURT\nA ...Petitioner\nJUDGMENT\nThis appeal is allowed. Costs were waived.",
    )
    .unwrap();
    let out = run(&["segment", path.to_str().unwrap(), "--doc-id", "j1"]);
    let value = stdout_json(&out);
    assert_eq!(value["doc_id"], "j1");
    let preamble_end = value["preamble_end"].as_u64().unwrap();
    assert!(preamble_end > 0);
    assert_eq!(value["sentences"].as_array().unwrap().len(), 2);
}

#[test]
fn import_stats_classify_select_round() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("train.jsonl");
    let lines = concat!(
        r#"{"id":"a","text":"Section 4 of the tax act was cited often here.","spans":[[0,9,"PROVISION"]],"meta":{"unit":"JUDGMENT_SENTENCE"}}"#,
        "\n",
        r#"{"id":"b","text":"No entities in this sentence at all today.","spans":[],"meta":{"unit":"JUDGMENT_SENTENCE"}}"#,
        "\n"
    );
    std::fs::write(&corpus, lines).unwrap();

    // import: canonical in, canonical out, split inferred from the filename.
    let out = run(&["import", corpus.to_str().unwrap()]);
    assert!(out.status.success());
    let exported = String::from_utf8(out.stdout).unwrap();
    assert_eq!(exported.lines().count(), 2);
    assert!(exported.contains(r#""split":"train""#));

    // stats over the same file.
    let out = run(&["stats", corpus.to_str().unwrap()]);
    let value = stdout_json(&out);
    assert_eq!(value["stats"]["splits"]["train"]["entities"], 1);
    assert_eq!(value["stats"]["splits"]["train"]["judgment_sentences"], 2);

    // stats --expect reports deltas rather than failing.
    let out = run(&["stats", corpus.to_str().unwrap(), "--expect", "train"]);
    let value = stdout_json(&out);
    assert_eq!(value["matches_reference"], false);
    assert!(value["deltas"].as_array().unwrap().len() > 2);

    // classify picks up the tax keyword.
    let out = run(&["classify", "--text", "assessed under the income tax act"]);
    let value = stdout_json(&out);
    assert_eq!(value["case_type"], "tax");
    assert_eq!(value["matched_keywords"][0]["keyword"], "tax act");

    // select keeps the entity-bearing sentence.
    let out = run(&["select", corpus.to_str().unwrap(), "--quota", "1", "--zero-fraction", "0.0"]);
    assert!(out.status.success());
    let selected = String::from_utf8(out.stdout).unwrap();
    assert_eq!(selected.lines().count(), 1);
    assert!(selected.contains(r#""id":"a""#));
}

#[test]
fn evaluate_reports_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("gold.jsonl");
    let pred = dir.path().join("pred.jsonl");
    std::fs::write(
        &gold,
        r#"{"id":"u1","text":"Mr Amit Kumar Vs State of Maharashtra was cited.","spans":[[0,37,"PRECEDENT"]],"meta":{"unit":"JUDGMENT_SENTENCE"}}"#,
    )
    .unwrap();
    // Prefix dropped: strict miss, type-match hit.
    std::fs::write(
        &pred,
        r#"{"id":"u1","text":"Mr Amit Kumar Vs State of Maharashtra was cited.","spans":[[3,37,"PRECEDENT"]],"meta":{"unit":"JUDGMENT_SENTENCE"}}"#,
    )
    .unwrap();

    let out = run(&[
        "evaluate",
        "--gold",
        gold.to_str().unwrap(),
        "--pred",
        pred.to_str().unwrap(),
        "--scheme",
        "both",
    ]);
    let value = stdout_json(&out);
    assert_eq!(value["strict"]["overall"]["tp"], 0);
    assert_eq!(value["type_match"]["overall"]["tp"], 1);
    assert_eq!(value["strict"]["overall"]["support"], 1);
    assert!(value["table"].as_str().unwrap().contains("PRECEDENT"));

    let out = run(&[
        "evaluate",
        "--gold",
        gold.to_str().unwrap(),
        "--pred",
        pred.to_str().unwrap(),
        "--table",
    ]);
    assert!(out.status.success());
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.starts_with("Entity"));
    assert!(table.lines().last().unwrap().starts_with("Overall"));
}

#[test]
fn evaluate_unit_filter_separates_reports() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("gold.jsonl");
    let pred = dir.path().join("pred.jsonl");
    let lines = concat!(
        r#"{"id":"p1","text":"Judge Rao presided","spans":[[0,9,"JUDGE"]],"meta":{"unit":"PREAMBLE"}}"#,
        "\n",
        r#"{"id":"s1","text":"Heard in Delhi today","spans":[[9,14,"GPE"]],"meta":{"unit":"JUDGMENT_SENTENCE"}}"#,
        "\n"
    );
    std::fs::write(&gold, lines).unwrap();
    std::fs::write(&pred, lines).unwrap();

    for (unit, expected_support) in [("all", 2u64), ("preamble", 1), ("sentence", 1)] {
        let out = run(&[
            "evaluate",
            "--gold",
            gold.to_str().unwrap(),
            "--pred",
            pred.to_str().unwrap(),
            "--scheme",
            "strict",
            "--unit",
            unit,
        ]);
        let value = stdout_json(&out);
        assert_eq!(
            value["strict"]["overall"]["support"].as_u64().unwrap(),
            expected_support,
            "unit filter {unit}"
        );
    }
}

#[test]
fn postprocess_exposes_cluster_keys_and_is_deterministic() {
    let mut rng = StdRng::seed_from_u64(0xc11);
    let records: Vec<AnnotationRecord> =
        (0..50).map(|i| gen_judgment(&mut rng, &format!("cli-{i}")).1).collect();
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("full.jsonl");
    std::fs::write(&input, export_corpus(&records)).unwrap();

    let out_a = dir.path().join("a.jsonl");
    let out_b = dir.path().join("b.jsonl");
    let out_c = dir.path().join("c.jsonl");
    for (threads, out) in [("1", &out_a), ("1", &out_b), ("4", &out_c)] {
        let result = run(&[
            "postprocess",
            input.to_str().unwrap(),
            "--threads",
            threads,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(
            result.status.success(),
            "postprocess failed: {}",
            String::from_utf8_lossy(&result.stderr)
        );
    }
    let a = std::fs::read(&out_a).unwrap();
    let b = std::fs::read(&out_b).unwrap();
    let c = std::fs::read(&out_c).unwrap();
    assert_eq!(a, b, "two identical runs differ");
    assert_eq!(a, c, "thread count changes bytes");

    // Serialized results expose the documented key names.
    let first_line = String::from_utf8(a).unwrap().lines().next().unwrap().to_string();
    let value: serde_json::Value = serde_json::from_str(&first_line).unwrap();
    assert!(value.get("precedent_clusters").is_some());
    assert!(value.get("statute_clusters").is_some());
    assert!(value.get("provision_statute_pairs").is_some());
}

#[test]
fn config_file_changes_behavior() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"segment": {"marker_keywords": ["RULING"]}}"#,
    )
    .unwrap();
    let text_file = dir.path().join("t.txt");
    std::fs::write(&text_file, "HEADER LINE ONE\nRULING\nBody text goes here today.").unwrap();

    let with_cfg = run(&[
        "segment",
        text_file.to_str().unwrap(),
        "--config",
        cfg.to_str().unwrap(),
    ]);
    let value = stdout_json(&with_cfg);
    assert!(value["preamble_end"].as_u64().unwrap() > 0);

    // Default keywords do not treat RULING as a marker; no verbs either, so
    // the whole text is judgment.
    let without = run(&["segment", text_file.to_str().unwrap()]);
    let value = stdout_json(&without);
    assert_eq!(value["preamble_end"], 0);
}
