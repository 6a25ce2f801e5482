//! Cluster statute mentions through brevity aliases and acronyms.
//!
//! ```bash
//! cargo run -p lexner --example statute_clusters
//! ```

use lexner::coref::{cluster_head_text, cluster_statutes, AcronymTable, CorefConfig};
use lexner::label::EntityLabel;
use lexner::span::SpanSource;
use lexner::JudgmentDoc;

fn main() {
    let text = "The complaint was filed under the Companies Act, 1956 (for brevity, 'the Act') before the tribunal. \
                Section 5 of the Act defines the term in question. \
                The accused was separately charged under the IPC for cheating. \
                The Indian Penal Code prescribes the punishment.";
    let find = |pat: &str, nth: usize| {
        let byte = text.match_indices(pat).nth(nth).unwrap().0;
        let start = text[..byte].chars().count();
        (start, start + pat.chars().count())
    };

    let doc = JudgmentDoc::new("demo", text).with_spans(
        &[
            {
                let r = find("Companies Act, 1956", 0);
                (r.0, r.1, EntityLabel::Statute)
            },
            {
                let r = find("the Act", 1);
                (r.0, r.1, EntityLabel::Statute)
            },
            {
                let r = find("IPC", 0);
                (r.0, r.1, EntityLabel::Statute)
            },
            {
                let r = find("Indian Penal Code", 0);
                (r.0, r.1, EntityLabel::Statute)
            },
        ],
        SpanSource::Predicted,
    );

    let res = cluster_statutes(&doc, &AcronymTable::default(), &CorefConfig::default());
    for (i, cluster) in res.clusters.iter().enumerate() {
        println!("cluster {i}: head {:?}", cluster_head_text(&doc, cluster));
        for &id in &cluster.member_span_ids {
            let span = doc.span_by_id(id).unwrap();
            println!("  member {}: {:?}", id, doc.span_text(span));
        }
        println!("  aliases: {:?}", cluster.aliases);
    }
    for w in &res.warnings {
        println!("warning: alias {:?} rebound", w.alias);
    }
}
