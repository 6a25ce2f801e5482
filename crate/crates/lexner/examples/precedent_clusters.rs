//! Cluster precedent mentions and resolve "supra" referents.
//!
//! ```bash
//! cargo run -p lexner --example precedent_clusters
//! ```

use lexner::coref::{cluster_precedents, CorefConfig};
use lexner::label::EntityLabel;
use lexner::span::SpanSource;
use lexner::JudgmentDoc;

const FULL: &str = "Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565";
const VARIANT: &str = "Gurbaksh Singh Sibbia Vs State of Punjab, (1980) 2 SCC 565";

fn main() {
    let text = format!(
        "The constitution bench of this court in {FULL} dealt with the scope and ambit of anticipatory bail. \
         That ratio was restated in {VARIANT} at page 570. \
         The learned counsel for the petitioner placed reliance on Sibbia's case (supra)."
    );
    let find = |pat: &str, nth: usize| {
        let byte = text.match_indices(pat).nth(nth).unwrap().0;
        let start = text[..byte].chars().count();
        (start, start + pat.chars().count())
    };

    let doc = JudgmentDoc::new("demo", text.clone()).with_spans(
        &[
            {
                let r = find(FULL, 0);
                (r.0, r.1, EntityLabel::Precedent)
            },
            {
                let r = find(VARIANT, 0);
                (r.0, r.1, EntityLabel::Precedent)
            },
            {
                let r = find("Sibbia", 2);
                (r.0, r.1, EntityLabel::OtherPerson)
            },
        ],
        SpanSource::Predicted,
    );

    let res = cluster_precedents(&doc, &CorefConfig::default());
    for (i, cluster) in res.clusters.iter().enumerate() {
        let head = res.doc.span_by_id(cluster.head_span_id).unwrap();
        println!("cluster {i}");
        println!("  head: {:?}", res.doc.span_text(head));
        for &id in &cluster.member_span_ids {
            let span = res.doc.span_by_id(id).unwrap();
            println!("  member {}: {:?} [{}]", id, res.doc.span_text(span), span.label);
        }
        println!("  party keys: {:?}", cluster.party_keys);
        println!("  citation keys: {:?}", cluster.citation_keys);
    }
}
