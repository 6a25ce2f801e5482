//! Validate a document's spans against the flat-annotation rules.
//!
//! ```bash
//! cargo run -p lexner --example validate_spans
//! ```

use lexner::label::EntityLabel;
use lexner::span::{EntitySpan, SpanId, SpanSource};
use lexner::JudgmentDoc;

fn main() {
    let text = "Bank of China opened a branch in Delhi. Adv. Meena Rao appeared.";
    let doc = JudgmentDoc::new("demo", text)
        .with_sentences(vec![(0, 39), (40, 64)])
        .with_spans(
            &[
                // Flat rule: "China" may not be tagged inside "Bank of China".
                (0, 13, EntityLabel::Org),
                (8, 13, EntityLabel::Gpe),
                // LAWYER inside the judgment region is tolerated with a warning.
                (45, 54, EntityLabel::Lawyer),
            ],
            SpanSource::Gold,
        );

    println!("document: {text}\n");
    for v in doc.validate() {
        println!("{:?} [{:?}] {}", v.severity, v.kind, v.message);
    }

    // A reversed span is rejected outright.
    let mut broken = doc.clone();
    broken.spans = vec![EntitySpan::new(SpanId(0), 5, 3, EntityLabel::Org, SpanSource::Gold)];
    println!("\nreversed offsets:");
    for v in broken.validate() {
        println!("{:?} [{:?}] {}", v.severity, v.kind, v.message);
    }
}
