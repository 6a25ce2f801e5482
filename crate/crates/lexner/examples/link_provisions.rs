//! Assign a governing statute to every provision: explicit same-sentence
//! bindings, unique explicit reuse, closest preceding sentence, unresolved.
//!
//! ```bash
//! cargo run -p lexner --example link_provisions
//! ```

use lexner::coref::{cluster_statutes, AcronymTable, CorefConfig};
use lexner::label::EntityLabel;
use lexner::provision::{link_provisions, ProvisionConfig};
use lexner::segment::segment_sentences;
use lexner::span::SpanSource;
use lexner::JudgmentDoc;

fn main() {
    let text = "Order 7 Rule 11 was cited at the outset without naming any statute. \
                Section 420 of Indian Penal Code says that cheating is punishable. \
                Sections 34 and 120B of the same code were also invoked. \
                The Companies Act regulates the audit in question. \
                Section 233 prescribes the procedure for it. \
                The section 420 says more about dishonest inducement.";
    let find = |pat: &str, nth: usize| {
        let byte = text.match_indices(pat).nth(nth).unwrap().0;
        let start = text[..byte].chars().count();
        (start, start + pat.chars().count())
    };

    let spans = vec![
        { let r = find("Order 7 Rule 11", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("Section 420", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("Indian Penal Code", 0); (r.0, r.1, EntityLabel::Statute) },
        { let r = find("Sections 34", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("120B", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("Companies Act", 0); (r.0, r.1, EntityLabel::Statute) },
        { let r = find("Section 233", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("section 420", 0); (r.0, r.1, EntityLabel::Provision) },
    ];

    let sentences = segment_sentences(text, (0, text.chars().count()));
    let doc = JudgmentDoc::new("demo", text)
        .with_sentences(sentences)
        .with_spans(&spans, SpanSource::Predicted);

    let clusters = cluster_statutes(&doc, &AcronymTable::default(), &CorefConfig::default()).clusters;
    let pairs = link_provisions(&doc, &clusters, &ProvisionConfig::default());
    for pair in &pairs {
        let prov = doc.span_by_id(pair.provision_span_id).unwrap();
        println!(
            "{:<16} -> {:<20} [{:?}]",
            doc.span_text(prov),
            pair.statute.as_deref().unwrap_or("UNRESOLVED"),
            pair.mode
        );
    }
}
