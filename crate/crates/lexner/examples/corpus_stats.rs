//! Import a small corpus, compute statistics, and compare a split against
//! the published reference counts.
//!
//! ```bash
//! cargo run -p lexner --example corpus_stats
//! ```

use lexner::corpus::{compute_stats, import_corpus_str, reference, FormatMapping, Split};

const CORPUS: &str = r#"{"id":"p1","text":"IN THE HIGH COURT OF DELHI\nAmit Kumar vs State","spans":[[7,26,"COURT"],[27,37,"PETITIONER"]],"meta":{"unit":"PREAMBLE","split":"train"}}
{"id":"s1","text":"The appeal was filed under Section 100 of the Code of Civil Procedure.","spans":[[27,38,"PROVISION"],[46,69,"STATUTE"]],"meta":{"unit":"JUDGMENT_SENTENCE","split":"train"}}
{"id":"s2","text":"The incident took place in Delhi on 5 January 2019.","spans":[[27,32,"GPE"],[36,50,"DATE"]],"meta":{"unit":"JUDGMENT_SENTENCE","split":"train"}}
{"id":"s3","text":"Nothing to tag in this one.","spans":[],"meta":{"unit":"JUDGMENT_SENTENCE","split":"dev"}}
"#;

fn main() {
    let report = import_corpus_str(CORPUS, &FormatMapping::canonical(), None).unwrap();
    println!("imported {} records, {} warnings", report.records.len(), report.warnings.len());

    let stats = compute_stats(&report.records);
    println!("{}", serde_json::to_string_pretty(&stats).unwrap());

    // The reference comparison itemizes every difference instead of failing;
    // a four-record corpus is of course nowhere near the published counts.
    let train = &stats.splits["train"];
    let deltas = reference::nonzero_deltas(train, Split::Train);
    println!("\ndeltas against the published train split ({} lines):", deltas.len());
    for d in deltas.iter().take(6) {
        println!("  {:<22} expected {:>6} actual {:>6} delta {:>6}", d.metric, d.expected, d.actual, d.delta);
    }
    println!("  ...");
}
