//! The full post-processing pipeline over whole judgments:
//! segmentation, reconciliation, coreference, provision linking.

use crate::config::PipelineConfig;
use crate::coref::{cluster_precedents, cluster_statutes, PrecedentCluster, StatuteCluster};
use crate::corpus::AnnotationRecord;
use crate::doc::{JudgmentDoc, Severity, ViolationKind};
use crate::error::{Error, Result};
use crate::provision::{link_provisions, ProvisionStatutePair};
use crate::reconcile::{reconcile, ReconcileConflict, ReconciliationRecord};
use crate::segment::{LexiconVerbAnalyzer, Segmenter};
use crate::span::{EntitySpan, SpanSource};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Everything the pipeline derives from one judgment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PostprocessOutput {
    pub doc_id: String,
    pub preamble_end: usize,
    pub sentences: Vec<(usize, usize)>,
    /// Spans with post-processed labels.
    pub spans: Vec<EntitySpan>,
    pub reconciliation_records: Vec<ReconciliationRecord>,
    pub reconciliation_conflicts: Vec<ReconcileConflict>,
    pub precedent_clusters: Vec<PrecedentCluster>,
    pub statute_clusters: Vec<StatuteCluster>,
    pub provision_statute_pairs: Vec<ProvisionStatutePair>,
    pub warnings: Vec<String>,
}

/// Run the pipeline over one full-judgment record. Spans are treated as
/// model predictions over the whole text.
pub fn postprocess_record(rec: &AnnotationRecord, cfg: &PipelineConfig) -> Result<PostprocessOutput> {
    let doc = JudgmentDoc::new(rec.doc_id.clone(), rec.text.clone())
        .with_spans(&rec.spans, SpanSource::Predicted);
    postprocess_doc(doc, cfg)
}

/// Run the pipeline over a prepared document. Missing segmentation is filled
/// in; structural violations (bad offsets, overlapping spans) abort, while
/// soft findings become warnings on the output.
pub fn postprocess_doc(mut doc: JudgmentDoc, cfg: &PipelineConfig) -> Result<PostprocessOutput> {
    let segmenter = Segmenter::new(&cfg.segment);
    if doc.sentence_bounds.is_empty() {
        if doc.preamble_end == 0 {
            doc.preamble_end = segmenter.split_preamble(&doc.text, &LexiconVerbAnalyzer);
        }
        doc.sentence_bounds =
            segmenter.segment_sentences(&doc.text, (doc.preamble_end, doc.char_len()));
    }

    let mut warnings = Vec::new();
    for v in doc.validate() {
        let hard = v.severity == Severity::Error
            && !matches!(v.kind, ViolationKind::SpanCrossesSentence);
        if hard {
            return Err(Error::InvalidDocument { doc_id: doc.doc_id.clone(), violations: vec![v] });
        }
        // Model output crosses sentence bounds now and then; record and move on.
        warnings.push(v.message);
    }

    let reconciled = reconcile(&doc);
    let precedents = cluster_precedents(&reconciled.doc, &cfg.coref);
    let statutes = cluster_statutes(&precedents.doc, &cfg.acronyms(), &cfg.coref);
    for w in &statutes.warnings {
        warnings.push(format!(
            "statute alias {:?} rebound from cluster {} to {}",
            w.alias, w.previous_cluster, w.new_cluster
        ));
    }
    let pairs = link_provisions(&precedents.doc, &statutes.clusters, &cfg.provision);

    let final_doc = precedents.doc;
    Ok(PostprocessOutput {
        doc_id: final_doc.doc_id,
        preamble_end: final_doc.preamble_end,
        sentences: final_doc.sentence_bounds,
        spans: final_doc.spans,
        reconciliation_records: reconciled.records,
        reconciliation_conflicts: reconciled.conflicts,
        precedent_clusters: precedents.clusters,
        statute_clusters: statutes.clusters,
        provision_statute_pairs: pairs,
        warnings,
    })
}

/// Process many records in parallel. Output order always matches input
/// order, so results are identical across thread counts.
pub fn postprocess_all(
    records: &[AnnotationRecord],
    cfg: &PipelineConfig,
) -> Result<Vec<PostprocessOutput>> {
    records
        .par_iter()
        .map(|rec| postprocess_record(rec, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::DocType;
    use crate::label::EntityLabel;
    use crate::provision::LinkMode;

    const JUDGMENT: &str = "\
IN THE HIGH COURT OF DELHI
Amit Kumar ...Petitioner
Versus
State ...Respondent
JUDGMENT
The petitioner Amit Kumar was charged under Section 420 of Indian Penal Code. \
The constitution bench in Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565 dealt with bail. \
Counsel placed reliance on Sibbia's case (supra) throughout. \
The section 420 says cheating is punishable.";

    fn char_range(text: &str, pat: &str, nth: usize) -> (usize, usize) {
        let byte = text.match_indices(pat).nth(nth).map(|(b, _)| b).unwrap();
        let start = text[..byte].chars().count();
        (start, start + pat.chars().count())
    }

    fn record() -> AnnotationRecord {
        let t = JUDGMENT;
        let spans = vec![
            {
                let r = char_range(t, "Amit Kumar", 0);
                (r.0, r.1, EntityLabel::Petitioner)
            },
            {
                let r = char_range(t, "Amit Kumar", 1);
                (r.0, r.1, EntityLabel::OtherPerson)
            },
            {
                let r = char_range(t, "Section 420", 0);
                (r.0, r.1, EntityLabel::Provision)
            },
            {
                let r = char_range(t, "Indian Penal Code", 0);
                (r.0, r.1, EntityLabel::Statute)
            },
            {
                let r = char_range(
                    t,
                    "Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565",
                    0,
                );
                (r.0, r.1, EntityLabel::Precedent)
            },
            {
                let r = char_range(t, "Sibbia", 1);
                (r.0, r.1, EntityLabel::OtherPerson)
            },
            {
                let r = char_range(t, "section 420", 0);
                (r.0, r.1, EntityLabel::Provision)
            },
        ];
        AnnotationRecord::new("hc-1", DocType::FullJudgment, t).with_spans(spans)
    }

    #[test]
    fn full_pipeline_end_to_end() {
        let out = postprocess_record(&record(), &PipelineConfig::default()).unwrap();

        // Preamble split is at the marker line.
        let body_start = char_range(JUDGMENT, "The petitioner", 0).0;
        assert_eq!(out.preamble_end, body_start);
        assert!(out.sentences.len() >= 4);

        // Reconciliation relabeled the second Amit Kumar.
        assert_eq!(out.reconciliation_records.len(), 1);
        assert_eq!(out.reconciliation_records[0].new_label, EntityLabel::Petitioner);

        // The Sibbia referent joined the precedent cluster.
        assert_eq!(out.precedent_clusters.len(), 1);
        assert_eq!(out.precedent_clusters[0].member_span_ids.len(), 2);

        // One statute cluster, and both provisions resolve to it.
        assert_eq!(out.statute_clusters.len(), 1);
        assert_eq!(out.provision_statute_pairs.len(), 2);
        assert_eq!(out.provision_statute_pairs[0].mode, LinkMode::Explicit);
        assert_eq!(out.provision_statute_pairs[1].mode, LinkMode::ImplicitUnique);
        for pair in &out.provision_statute_pairs {
            assert_eq!(pair.statute.as_deref(), Some("Indian Penal Code"));
        }
    }

    #[test]
    fn output_is_deterministic_across_thread_counts() {
        let records: Vec<AnnotationRecord> = (0..20)
            .map(|i| {
                let mut r = record();
                r.doc_id = format!("hc-{i}");
                r
            })
            .collect();
        let cfg = PipelineConfig::default();
        let serialize = |outs: &[PostprocessOutput]| {
            outs.iter()
                .map(|o| serde_json::to_string(o).unwrap())
                .collect::<Vec<_>>()
                .join("\n")
        };
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| postprocess_all(&records, &cfg).unwrap());
        let multi = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| postprocess_all(&records, &cfg).unwrap());
        assert_eq!(serialize(&single), serialize(&multi));
    }

    #[test]
    fn structural_violations_abort() {
        let rec = AnnotationRecord::new("bad", DocType::FullJudgment, "tiny text")
            .with_spans(vec![(0, 50, EntityLabel::Court)]);
        assert!(matches!(
            postprocess_record(&rec, &PipelineConfig::default()),
            Err(Error::InvalidDocument { .. })
        ));
    }
}
