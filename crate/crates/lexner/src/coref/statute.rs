//! Statute coreference.
//!
//! A judgment introduces a statute once with its full name, as in "the
//! Companies Act, 1956 (for brevity, 'the Act')", and uses the short form
//! afterwards.
//! Each STATUTE span starts or joins a cluster: a parenthetical with a
//! brevity keyword binds an alias to the cluster, later STATUTE spans whose
//! normalized text equals a bound alias join that cluster, and spans that hit
//! the acronym table get the full form added to the cluster's aliases. All
//! entities in a statute cluster refer to the statute named by the head.

use super::{AcronymTable, CorefConfig};
use crate::doc::JudgmentDoc;
use crate::label::EntityLabel;
use crate::span::SpanId;
use crate::textnorm::normalize;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// A group of STATUTE mentions referring to one statute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatuteCluster {
    /// The full statute name: the longest member.
    pub head_span_id: SpanId,
    /// All members, ordered by document position.
    pub member_span_ids: Vec<SpanId>,
    /// Normalized alias strings; always contains at least the head's
    /// normalized text. Sorted for stable serialization.
    pub aliases: Vec<String>,
}

/// The same alias was bound to two clusters; the later binding won.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AliasCollision {
    pub alias: String,
    pub previous_cluster: usize,
    pub new_cluster: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StatuteResolution {
    pub clusters: Vec<StatuteCluster>,
    pub warnings: Vec<AliasCollision>,
}

const QUOTE_CHARS: [char; 6] =
    ['\'', '"', '\u{2018}', '\u{2019}', '\u{201c}', '\u{201d}'];
const ALIAS_LEAD_FILLER: [&str; 4] = ["referred", "to", "as", "called"];

/// Pull the alias out of a parenthetical such as
/// `(for brevity, 'the Act')` or `(hereinafter the Act)`.
fn alias_from_parenthetical(content: &str, keywords: &[String]) -> Option<String> {
    let lower = content.to_lowercase();
    let keyword = keywords
        .iter()
        .filter_map(|k| lower.find(&k.to_lowercase()).map(|at| (at, k.len())))
        .min_by_key(|&(at, _)| at)?;

    // Quoted alias wins; otherwise take the phrase trailing the keyword.
    let quote_positions: Vec<usize> = content
        .char_indices()
        .filter(|(_, c)| QUOTE_CHARS.contains(c))
        .map(|(b, _)| b)
        .collect();
    if quote_positions.len() >= 2 {
        let start = quote_positions[0];
        let end = quote_positions[1];
        let inner = &content[start..end];
        let inner = inner.trim_start_matches(|c| QUOTE_CHARS.contains(&c));
        let alias = normalize(inner);
        if !alias.is_empty() {
            return Some(alias);
        }
    }

    let after = &content[keyword.0 + keyword.1..];
    let mut words: Vec<&str> = after
        .split_whitespace()
        .map(|w| w.trim_matches(|c: char| !c.is_alphanumeric()))
        .filter(|w| !w.is_empty())
        .collect();
    while let Some(first) = words.first() {
        if ALIAS_LEAD_FILLER.contains(&first.to_lowercase().as_str()) {
            words.remove(0);
        } else {
            break;
        }
    }
    let alias = normalize(&words.join(" "));
    if alias.is_empty() {
        None
    } else {
        Some(alias)
    }
}

/// Group the document's STATUTE spans into clusters.
///
/// Alias collisions are not fatal: the later binding wins and a warning is
/// emitted. Pure and deterministic.
pub fn cluster_statutes(
    doc: &JudgmentDoc,
    acronyms: &AcronymTable,
    cfg: &CorefConfig,
) -> StatuteResolution {
    let map = doc.char_map();
    let chars: Vec<char> = doc.text.chars().collect();

    struct Build {
        members: Vec<(usize, usize, SpanId)>,
        aliases: BTreeSet<String>,
    }

    let mut builds: Vec<Build> = Vec::new();
    let mut alias_index: HashMap<String, usize> = HashMap::new();
    let mut warnings: Vec<AliasCollision> = Vec::new();

    let mut order: Vec<&crate::span::EntitySpan> = doc
        .spans
        .iter()
        .filter(|s| s.label == EntityLabel::Statute)
        .collect();
    order.sort_by_key(|s| (s.start, s.end));

    for span in order {
        let text = map.slice(&doc.text, span.start, span.end);
        let mut keys = vec![normalize(text)];
        if let Some(full) = acronyms.expand(text.trim()) {
            let norm = normalize(full);
            if !keys.contains(&norm) {
                keys.push(norm);
            }
        }
        keys.retain(|k| !k.is_empty());

        let target = keys.iter().find_map(|k| alias_index.get(k).copied());
        let idx = match target {
            Some(idx) => idx,
            None => {
                builds.push(Build { members: Vec::new(), aliases: BTreeSet::new() });
                builds.len() - 1
            }
        };
        builds[idx].members.push((span.start, span.end, span.id));

        let bind = |alias: String,
                        builds: &mut Vec<Build>,
                        alias_index: &mut HashMap<String, usize>,
                        warnings: &mut Vec<AliasCollision>| {
            builds[idx].aliases.insert(alias.clone());
            if let Some(previous) = alias_index.insert(alias.clone(), idx) {
                if previous != idx {
                    warnings.push(AliasCollision {
                        alias,
                        previous_cluster: previous,
                        new_cluster: idx,
                    });
                }
            }
        };

        for key in keys {
            bind(key, &mut builds, &mut alias_index, &mut warnings);
        }

        // Parenthetical alias: "(" must open within the window after the span.
        let limit = (span.end + cfg.statute_paren_window + 160).min(chars.len());
        if span.end < limit {
            let following: String = chars[span.end..limit].iter().collect();
            if let Some(open) = following.char_indices().position(|(_, c)| c == '(') {
                if open <= cfg.statute_paren_window {
                    let after_open: String =
                        following.chars().skip(open + 1).collect();
                    if let Some(close) = after_open.find(')') {
                        let content = &after_open[..close];
                        if let Some(alias) =
                            alias_from_parenthetical(content, &cfg.brevity_keywords)
                        {
                            bind(alias, &mut builds, &mut alias_index, &mut warnings);
                        }
                    }
                }
            }
        }
    }

    let clusters = builds
        .into_iter()
        .map(|mut b| {
            b.members.sort();
            let head = b
                .members
                .iter()
                .max_by(|a, c| (a.1 - a.0).cmp(&(c.1 - c.0)).then(c.0.cmp(&a.0)))
                .expect("cluster has at least one member");
            StatuteCluster {
                head_span_id: head.2,
                member_span_ids: b.members.iter().map(|m| m.2).collect(),
                aliases: b.aliases.into_iter().collect(),
            }
        })
        .collect();

    StatuteResolution { clusters, warnings }
}

/// The head span's text, resolved through the document.
pub fn cluster_head_text(doc: &JudgmentDoc, cluster: &StatuteCluster) -> String {
    doc.span_by_id(cluster.head_span_id)
        .map(|s| doc.span_text(s))
        .unwrap_or_default()
}
