//! Document-level entity reconciliation.
//!
//! The same name can be tagged differently in different sentences of one
//! judgment: "Amit Kumar" may be a PETITIONER in the preamble but come out
//! as OTHER_PERSON in a body sentence where nothing marks the role. Spans
//! labeled OTHER_PERSON or ORG whose normalized text exactly matches a
//! PETITIONER, RESPONDENT, JUDGE, LAWYER or WITNESS span anywhere in the
//! same document get that role label instead. Role entities from both the
//! preamble and the judgment region participate.

use crate::doc::JudgmentDoc;
use crate::label::EntityLabel;
use crate::span::SpanId;
use crate::textnorm::normalize;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One relabeling performed by [`reconcile`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconciliationRecord {
    pub span_id: SpanId,
    pub old_label: EntityLabel,
    pub new_label: EntityLabel,
    pub matched_span_id: SpanId,
}

/// An eligible span that matched role spans with conflicting labels.
/// No relabeling happens; a silent arbitrary choice would corrupt data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileConflict {
    pub span_id: SpanId,
    pub text: String,
    pub candidate_labels: Vec<EntityLabel>,
}

/// Output of [`reconcile`]: the updated document plus an audit trail.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reconciliation {
    pub doc: JudgmentDoc,
    pub records: Vec<ReconciliationRecord>,
    pub conflicts: Vec<ReconcileConflict>,
}

/// Overwrite OTHER_PERSON/ORG labels that exactly match a role entity in the
/// same document. Offsets never change; only labels do. Pure and idempotent.
pub fn reconcile(doc: &JudgmentDoc) -> Reconciliation {
    let map = doc.char_map();

    // Normalized role text -> (first matching span id, labels seen), in
    // document order so the recorded match is deterministic.
    let mut role_index: HashMap<String, Vec<(SpanId, EntityLabel)>> = HashMap::new();
    let mut ordered: Vec<&crate::span::EntitySpan> = doc.spans.iter().collect();
    ordered.sort_by_key(|s| (s.start, s.end));
    for span in &ordered {
        if span.label.is_role() {
            let key = normalize(map.slice(&doc.text, span.start, span.end));
            if !key.is_empty() {
                role_index.entry(key).or_default().push((span.id, span.label));
            }
        }
    }

    let mut out = doc.clone();
    let mut records = Vec::new();
    let mut conflicts = Vec::new();

    for span in &mut out.spans {
        if !span.label.is_reconcilable() {
            continue;
        }
        let key = normalize(map.slice(&doc.text, span.start, span.end));
        let Some(matches) = role_index.get(&key) else { continue };

        let mut labels: Vec<EntityLabel> = matches.iter().map(|&(_, l)| l).collect();
        labels.sort();
        labels.dedup();
        match labels.as_slice() {
            [single] => {
                let matched = matches.iter().find(|&&(_, l)| l == *single).unwrap().0;
                records.push(ReconciliationRecord {
                    span_id: span.id,
                    old_label: span.label,
                    new_label: *single,
                    matched_span_id: matched,
                });
                span.label = *single;
            }
            _ => conflicts.push(ReconcileConflict {
                span_id: span.id,
                text: key,
                candidate_labels: labels,
            }),
        }
    }

    Reconciliation { doc: out, records, conflicts }
}
