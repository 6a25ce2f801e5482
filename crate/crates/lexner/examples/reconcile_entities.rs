//! Overwrite OTHER_PERSON/ORG labels that exactly match a role entity
//! elsewhere in the same judgment.
//!
//! ```bash
//! cargo run -p lexner --example reconcile_entities
//! ```

use lexner::label::EntityLabel;
use lexner::reconcile::reconcile;
use lexner::span::SpanSource;
use lexner::JudgmentDoc;

fn main() {
    let text = "\
Amit Kumar ...Petitioner
JUDGMENT
Four unidentified persons attacked Amit Kumar. \
The witness Shyam Lal saw the incident. \
Later Shyam Lal identified two of them.";

    let find = |pat: &str, nth: usize| {
        let byte = text.match_indices(pat).nth(nth).unwrap().0;
        let start = text[..byte].chars().count();
        (start, start + pat.chars().count())
    };
    let body_start = find("Four", 0).0;

    let sentences = lexner::segment::segment_sentences(text, (body_start, text.chars().count()));
    let doc = JudgmentDoc::new("demo", text)
        .with_preamble_end(body_start)
        .with_sentences(sentences)
        .with_spans(
            &[
                {
                    let r = find("Amit Kumar", 0);
                    (r.0, r.1, EntityLabel::Petitioner)
                },
                {
                    let r = find("Amit Kumar", 1);
                    (r.0, r.1, EntityLabel::OtherPerson)
                },
                {
                    let r = find("Shyam Lal", 0);
                    (r.0, r.1, EntityLabel::Witness)
                },
                {
                    let r = find("Shyam Lal", 1);
                    (r.0, r.1, EntityLabel::OtherPerson)
                },
            ],
            SpanSource::Predicted,
        );

    let result = reconcile(&doc);
    println!("relabelings:");
    for rec in &result.records {
        let span = result.doc.span_by_id(rec.span_id).unwrap();
        println!(
            "  span {} {:?} {} -> {} (matched span {})",
            rec.span_id,
            result.doc.span_text(span),
            rec.old_label,
            rec.new_label,
            rec.matched_span_id
        );
    }
    for c in &result.conflicts {
        println!("conflict: {:?} matches {:?}", c.text, c.candidate_labels);
    }
    println!("\nfinal labels:");
    for span in &result.doc.spans {
        println!("  ({}, {}) {} {:?}", span.start, span.end, span.label, result.doc.span_text(span));
    }
}
