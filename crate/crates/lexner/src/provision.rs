//! Assign a governing statute to every PROVISION span.
//!
//! Explicit mentions pair a provision and statute in one sentence ("Section
//! 420 of Indian Penal Code"): the statute binds to the nearest preceding
//! provision in that sentence. Remaining provisions are implicit: reuse a
//! unique explicit mapping for the same provision key if one exists anywhere
//! in the document, otherwise take the statute from the closest preceding
//! sentence, otherwise report the provision unresolved. Statutes are
//! reported as cluster heads so aliases resolve to full names.

use crate::coref::StatuteCluster;
use crate::doc::JudgmentDoc;
use crate::label::EntityLabel;
use crate::span::SpanId;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// How a pair was resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LinkMode {
    Explicit,
    ImplicitUnique,
    ImplicitNearest,
    Unresolved,
}

/// A provision span linked to its governing statute (or unresolved).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvisionStatutePair {
    pub provision_span_id: SpanId,
    /// Cluster head text of the governing statute; `None` when unresolved.
    pub statute: Option<String>,
    pub mode: LinkMode,
    /// The statute span the binding was derived from.
    pub evidence_span_id: Option<SpanId>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct ProvisionConfig {
    /// When set, a statute binds only the single nearest preceding provision
    /// in its sentence. The default additionally binds every provision
    /// between the previous statute mention and this one, which is what
    /// conjunction lists like "Sections 420 and 468 of IPC" need.
    pub strict_explicit: bool,
}

/// Provision key: "Section 420", "section 420" and "Sec. 420" all share one.
pub fn provision_key(text: &str) -> String {
    let mut out: Vec<String> = Vec::new();
    for token in text.split_whitespace() {
        let t = token
            .trim_matches(|c: char| !c.is_alphanumeric())
            .to_lowercase();
        if t.is_empty() || t == "of" || t == "the" {
            continue;
        }
        let canon = match t.as_str() {
            "sec" | "s" | "ss" | "sections" => "section".to_string(),
            "art" | "articles" => "article".to_string(),
            other => other.to_string(),
        };
        out.push(canon);
    }
    out.join(" ")
}

/// Link every PROVISION span of the document to a statute.
///
/// Requires `cluster_statutes` output; every PROVISION span appears in
/// exactly one returned pair, in document order.
pub fn link_provisions(
    doc: &JudgmentDoc,
    statute_clusters: &[StatuteCluster],
    cfg: &ProvisionConfig,
) -> Vec<ProvisionStatutePair> {
    let map = doc.char_map();

    let cluster_of: HashMap<SpanId, usize> = statute_clusters
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.member_span_ids.iter().map(move |&id| (id, i)))
        .collect();
    let head_text: Vec<String> = statute_clusters
        .iter()
        .map(|c| {
            doc.span_by_id(c.head_span_id)
                .map(|s| map.slice(&doc.text, s.start, s.end).to_string())
                .unwrap_or_default()
        })
        .collect();

    let statute_for = |evidence: SpanId| -> Option<String> {
        match cluster_of.get(&evidence) {
            Some(&ci) => Some(head_text[ci].clone()),
            None => doc
                .span_by_id(evidence)
                .map(|s| map.slice(&doc.text, s.start, s.end).to_string()),
        }
    };

    #[derive(Clone, Copy)]
    struct Pos {
        id: SpanId,
        start: usize,
        end: usize,
        sentence: Option<usize>,
    }
    let collect = |label: EntityLabel| -> Vec<Pos> {
        let mut v: Vec<Pos> = doc
            .spans
            .iter()
            .filter(|s| s.label == label)
            .map(|s| Pos {
                id: s.id,
                start: s.start,
                end: s.end,
                sentence: doc.sentence_index_of(s),
            })
            .collect();
        v.sort_by_key(|p| (p.start, p.end));
        v
    };
    let provisions = collect(EntityLabel::Provision);
    let statutes = collect(EntityLabel::Statute);

    // Step 1: explicit bindings, statutes in document order.
    let mut bound: BTreeMap<SpanId, (SpanId, LinkMode)> = BTreeMap::new();
    for (si, statute) in statutes.iter().enumerate() {
        let Some(sent) = statute.sentence else { continue };
        // Lower bound: the previous statute mention in the same sentence.
        let floor = statutes[..si]
            .iter()
            .rev()
            .find(|s| s.sentence == Some(sent))
            .map(|s| s.end)
            .unwrap_or(0);
        let mut in_range: Vec<&Pos> = provisions
            .iter()
            .filter(|p| {
                p.sentence == Some(sent)
                    && p.start < statute.start
                    && p.start >= floor
                    && !bound.contains_key(&p.id)
            })
            .collect();
        in_range.sort_by_key(|p| p.start);
        if cfg.strict_explicit {
            if let Some(nearest) = in_range.last() {
                bound.insert(nearest.id, (statute.id, LinkMode::Explicit));
            }
        } else {
            for p in in_range {
                bound.insert(p.id, (statute.id, LinkMode::Explicit));
            }
        }
    }

    // Step 2 preparation: explicit mappings by provision key.
    let mut explicit_by_key: BTreeMap<String, Vec<(usize, SpanId)>> = BTreeMap::new();
    for p in &provisions {
        if let Some(&(evidence, LinkMode::Explicit)) = bound.get(&p.id) {
            let key = provision_key(map.slice(&doc.text, p.start, p.end));
            let cluster = cluster_of.get(&evidence).copied().unwrap_or(usize::MAX);
            explicit_by_key.entry(key).or_default().push((cluster, evidence));
        }
    }

    let mut pairs = Vec::with_capacity(provisions.len());
    for p in &provisions {
        if let Some(&(evidence, mode)) = bound.get(&p.id) {
            pairs.push(ProvisionStatutePair {
                provision_span_id: p.id,
                statute: statute_for(evidence),
                mode,
                evidence_span_id: Some(evidence),
            });
            continue;
        }

        // Step 2: unique explicit mapping for the same key, anywhere in the
        // document. Multiple distinct statutes for the key fall through.
        let key = provision_key(map.slice(&doc.text, p.start, p.end));
        if let Some(entries) = explicit_by_key.get(&key) {
            let mut clusters: Vec<usize> = entries.iter().map(|&(c, _)| c).collect();
            clusters.sort();
            clusters.dedup();
            if clusters.len() == 1 {
                let evidence = entries[0].1;
                pairs.push(ProvisionStatutePair {
                    provision_span_id: p.id,
                    statute: statute_for(evidence),
                    mode: LinkMode::ImplicitUnique,
                    evidence_span_id: Some(evidence),
                });
                continue;
            }
        }

        // Step 3: statute from the closest preceding sentence.
        let nearest = p.sentence.and_then(|sent| {
            (0..sent).rev().find_map(|j| {
                statutes
                    .iter()
                    .filter(|s| s.sentence == Some(j))
                    .max_by_key(|s| s.start)
            })
        });
        match nearest {
            Some(statute) => pairs.push(ProvisionStatutePair {
                provision_span_id: p.id,
                statute: statute_for(statute.id),
                mode: LinkMode::ImplicitNearest,
                evidence_span_id: Some(statute.id),
            }),
            // Step 4: nothing precedes the provision.
            None => pairs.push(ProvisionStatutePair {
                provision_span_id: p.id,
                statute: None,
                mode: LinkMode::Unresolved,
                evidence_span_id: None,
            }),
        }
    }

    pairs
}
