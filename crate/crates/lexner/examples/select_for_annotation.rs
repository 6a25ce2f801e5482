//! Pick entity-rich sentences for annotation, balancing label frequencies.
//!
//! ```bash
//! cargo run -p lexner --example select_for_annotation
//! ```

use lexner::corpus::{select_sentences, AnnotationRecord, SelectConfig};
use lexner::doc::DocType;
use lexner::label::EntityLabel;

fn main() {
    let mut units: Vec<AnnotationRecord> = Vec::new();

    // Lots of DATE-bearing sentences, a couple of rare WITNESS ones, some
    // noise the filters should drop.
    for i in 0..12 {
        units.push(
            AnnotationRecord::new(
                format!("date-{i}"),
                DocType::JudgmentSentence,
                format!("The hearing number {i} took place on 5 January 201{}.", i % 10),
            )
            .with_spans(vec![(33 + i.to_string().len(), 47, EntityLabel::Date)]),
        );
    }
    for i in 0..2 {
        units.push(
            AnnotationRecord::new(
                format!("witness-{i}"),
                DocType::JudgmentSentence,
                format!("The witness Shyam Lal number {i} saw the whole incident."),
            )
            .with_spans(vec![(12, 21, EntityLabel::Witness)]),
        );
    }
    units.push(AnnotationRecord::new(
        "short",
        DocType::JudgmentSentence,
        "Too short.",
    ));
    units.push(AnnotationRecord::new(
        "hindi",
        DocType::JudgmentSentence,
        "The plaint quotes \u{0915}\u{093e}\u{0928}\u{0942}\u{0928} in the vernacular language.",
    ));
    for i in 0..6 {
        units.push(AnnotationRecord::new(
            format!("plain-{i}"),
            DocType::JudgmentSentence,
            format!("Plain sentence number {i} with nothing to annotate in it."),
        ));
    }

    let cfg = SelectConfig { per_label_quota: 2, zero_entity_fraction: 0.25, seed: 42, ..Default::default() };
    let outcome = select_sentences(&units, &cfg);

    println!(
        "selected {} of {} (dropped: {} short, {} non-english, {} side-by-side, {} duplicate)\n",
        outcome.selected.len(),
        units.len(),
        outcome.dropped_short,
        outcome.dropped_non_english,
        outcome.dropped_side_by_side,
        outcome.dropped_duplicate
    );
    for rec in &outcome.selected {
        let labels: Vec<String> =
            rec.spans.iter().map(|&(_, _, l)| l.to_string()).collect();
        println!("{:<12} {:?} {}", rec.doc_id, labels, rec.text);
    }
}
