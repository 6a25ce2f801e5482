//! Precedent coreference.
//!
//! Judges write a precedent's full name once, e.g. "Gurbaksh Singh Sibbia
//! and others Vs State of Punjab (1980) 2 SCC 565", then fall back to the
//! first party: "placed reliance on Sibbia's case (supra)". PRECEDENT mentions are
//! clustered by matching party names and citations; ORG/OTHER_PERSON spans
//! followed by a referent keyword are resolved against the party names of
//! preceding precedents, relabeled PRECEDENT on a match, and absorbed into
//! the cluster of the closest matching preceding precedent. The longest
//! entity in each cluster is its head.

use super::CorefConfig;
use crate::doc::JudgmentDoc;
use crate::label::EntityLabel;
use crate::span::SpanId;
use crate::textnorm::{contains_token_run, jaccard, normalize, tokens};
use regex::Regex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A group of mentions referring to one precedent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecedentCluster {
    /// The designated full citation: the longest member.
    pub head_span_id: SpanId,
    /// All members, ordered by document position.
    pub member_span_ids: Vec<SpanId>,
    /// Normalized party-name strings contributed by the members.
    pub party_keys: Vec<String>,
    /// Normalized reporter citations contributed by the members.
    pub citation_keys: Vec<String>,
}

/// Output of [`cluster_precedents`]: relabeled document plus clusters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrecedentResolution {
    pub doc: JudgmentDoc,
    pub clusters: Vec<PrecedentCluster>,
}

/// Structure extracted from one precedent string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPrecedent {
    /// Token lists per party, filler words removed.
    pub parties: Vec<Vec<String>>,
    /// Union of party tokens, used for Jaccard matching.
    pub token_set: BTreeSet<String>,
    /// Normalized reporter citation, when one is present.
    pub citation: Option<String>,
    /// Raw-normalized party strings for reporting.
    pub party_keys: Vec<String>,
    /// Whether the mention has party/citation structure (a bare surname
    /// reference like "Sibbia" does not).
    pub structured: bool,
}

const PARTY_FILLER: [&str; 6] = ["and", "or", "anr", "another", "ors", "others"];

fn party_tokens(s: &str) -> Vec<String> {
    tokens(s)
        .into_iter()
        .filter(|t| !PARTY_FILLER.contains(&t.as_str()))
        .collect()
}

struct Compiled {
    separator: Regex,
    citations: Vec<Regex>,
}

fn compile(cfg: &CorefConfig) -> Compiled {
    let mut alts: Vec<String> = cfg
        .party_separators
        .iter()
        .map(|s| regex::escape(s.trim()).to_lowercase())
        .collect();
    alts.sort();
    alts.dedup();
    let separator = Regex::new(&format!(r"(?i)\s+(?:{})\s+", alts.join("|")))
        .expect("separator pattern should compile");
    let citations = cfg
        .citation_patterns
        .iter()
        .map(|p| Regex::new(p).expect("citation pattern should compile"))
        .collect();
    Compiled { separator, citations }
}

impl Compiled {
    /// Parse a precedent string into parties and citation. The citation is
    /// the longest suffix matching a reporter pattern; party 1 is the text
    /// before the first separator, party 2 the text between separator and
    /// citation.
    fn parse(&self, text: &str) -> ParsedPrecedent {
        let citation_match = self
            .citations
            .iter()
            .flat_map(|re| re.find_iter(text))
            .max_by_key(|m| (m.start(), m.end()));
        let citation_start = citation_match.as_ref().map(|m| m.start());
        let citation = citation_match
            .as_ref()
            .map(|m| tokens(m.as_str()).join(" "))
            .filter(|c| !c.is_empty());

        let body = &text[..citation_start.unwrap_or(text.len())];
        let mut raw_parties: Vec<&str> = Vec::new();
        let mut structured = citation.is_some();
        if let Some(m) = self.separator.find(body) {
            structured = true;
            raw_parties.push(&body[..m.start()]);
            raw_parties.push(&body[m.end()..]);
        } else {
            raw_parties.push(body);
        }

        let mut parties = Vec::new();
        let mut party_keys = Vec::new();
        for raw in raw_parties {
            let toks = party_tokens(raw);
            let key = normalize(raw);
            if !toks.is_empty() {
                parties.push(toks);
            }
            if !key.is_empty() {
                party_keys.push(key);
            }
        }
        let token_set: BTreeSet<String> = parties.iter().flatten().cloned().collect();

        ParsedPrecedent { parties, token_set, citation, party_keys, structured }
    }
}

struct ClusterBuild {
    members: Vec<SpanId>,
    member_token_sets: Vec<BTreeSet<String>>,
    citations: BTreeSet<String>,
    party_keys: Vec<String>,
    citation_keys: Vec<String>,
}

impl ClusterBuild {
    fn new() -> Self {
        ClusterBuild {
            members: Vec::new(),
            member_token_sets: Vec::new(),
            citations: BTreeSet::new(),
            party_keys: Vec::new(),
            citation_keys: Vec::new(),
        }
    }

    fn absorb(&mut self, id: SpanId, parsed: &ParsedPrecedent) {
        self.members.push(id);
        self.member_token_sets.push(parsed.token_set.clone());
        for key in &parsed.party_keys {
            if !self.party_keys.contains(key) {
                self.party_keys.push(key.clone());
            }
        }
        if let Some(c) = &parsed.citation {
            self.citations.insert(c.clone());
            if !self.citation_keys.contains(c) {
                self.citation_keys.push(c.clone());
            }
        }
    }
}

/// Record of one precedent mention already placed in a cluster, used to
/// resolve later bare mentions and referents against "the closest matching
/// preceding precedent".
struct Placed {
    start: usize,
    parties: Vec<Vec<String>>,
    cluster: usize,
}

fn nearest_antecedent(placed: &[Placed], before: usize, mention: &[String]) -> Option<usize> {
    placed
        .iter()
        .filter(|p| p.start < before)
        .filter(|p| p.parties.iter().any(|party| contains_token_run(party, mention)))
        .max_by_key(|p| p.start)
        .map(|p| p.cluster)
}

/// Cluster PRECEDENT mentions and absorb referents.
///
/// Pure; returns a new document in which matched referent spans carry the
/// PRECEDENT label. Running the function again on its own output reproduces
/// the same clusters.
pub fn cluster_precedents(doc: &JudgmentDoc, cfg: &CorefConfig) -> PrecedentResolution {
    let compiled = compile(cfg);
    let map = doc.char_map();
    let chars: Vec<char> = doc.text.chars().collect();

    let mut order: Vec<usize> = (0..doc.spans.len()).collect();
    order.sort_by_key(|&i| (doc.spans[i].start, doc.spans[i].end));

    let mut clusters: Vec<ClusterBuild> = Vec::new();
    let mut placed: Vec<Placed> = Vec::new();

    // Pass 1: cluster everything already labeled PRECEDENT, in document
    // order. Structured mentions match on citations or party Jaccard; bare
    // mentions attach to the nearest preceding precedent containing them.
    for &i in &order {
        let span = &doc.spans[i];
        if span.label != EntityLabel::Precedent {
            continue;
        }
        let text = map.slice(&doc.text, span.start, span.end);
        let parsed = compiled.parse(text);

        let target = if parsed.structured {
            clusters.iter().position(|c| {
                let citation_hit = parsed
                    .citation
                    .as_ref()
                    .map(|cit| c.citations.contains(cit))
                    .unwrap_or(false);
                citation_hit
                    || c.member_token_sets
                        .iter()
                        .any(|ts| jaccard(ts, &parsed.token_set) >= cfg.party_jaccard)
            })
        } else {
            let mention = party_tokens(text);
            nearest_antecedent(&placed, span.start, &mention)
        };

        let idx = match target {
            Some(idx) => idx,
            None => {
                clusters.push(ClusterBuild::new());
                clusters.len() - 1
            }
        };
        clusters[idx].absorb(span.id, &parsed);
        placed.push(Placed { start: span.start, parties: parsed.parties.clone(), cluster: idx });
    }

    // Pass 2: referent candidates (ORG or OTHER_PERSON immediately followed
    // by a referent keyword) searched against preceding precedents' party
    // names. Matches are relabeled PRECEDENT and join the cluster of the
    // closest matching preceding precedent; non-matches stay unchanged.
    let mut out = doc.clone();
    let keywords: Vec<String> = cfg.referent_keywords.iter().map(|k| k.to_lowercase()).collect();
    for &i in &order {
        let span = &doc.spans[i];
        if !matches!(span.label, EntityLabel::Org | EntityLabel::OtherPerson) {
            continue;
        }
        let window_end = (span.end + cfg.referent_window).min(chars.len());
        if span.end >= window_end {
            continue;
        }
        let window: String = chars[span.end..window_end]
            .iter()
            .map(|&c| if c == '\u{2019}' { '\'' } else { c })
            .collect::<String>()
            .to_lowercase();
        if !keywords.iter().any(|k| window.contains(k)) {
            continue;
        }

        let text = map.slice(&doc.text, span.start, span.end);
        let mention = party_tokens(text);
        if let Some(idx) = nearest_antecedent(&placed, span.start, &mention) {
            let parsed = compiled.parse(text);
            clusters[idx].absorb(span.id, &parsed);
            placed.push(Placed {
                start: span.start,
                parties: parsed.parties,
                cluster: idx,
            });
            if let Some(target) = out.spans.iter_mut().find(|s| s.id == span.id) {
                target.label = EntityLabel::Precedent;
            }
        }
    }

    // Finalize: order members by position, pick the longest as head.
    let mut finished: Vec<(usize, PrecedentCluster)> = clusters
        .into_iter()
        .filter(|c| !c.members.is_empty())
        .map(|c| {
            let mut members: Vec<(usize, usize, SpanId)> = c
                .members
                .iter()
                .map(|&id| {
                    let s = doc.span_by_id(id).expect("member id from this doc");
                    (s.start, s.end, id)
                })
                .collect();
            members.sort();
            let head = members
                .iter()
                .max_by(|a, b| (a.1 - a.0).cmp(&(b.1 - b.0)).then(b.0.cmp(&a.0)))
                .expect("non-empty cluster");
            let first_start = members[0].0;
            (
                first_start,
                PrecedentCluster {
                    head_span_id: head.2,
                    member_span_ids: members.iter().map(|m| m.2).collect(),
                    party_keys: c.party_keys,
                    citation_keys: c.citation_keys,
                },
            )
        })
        .collect();
    finished.sort_by_key(|(start, c)| (*start, c.head_span_id));

    PrecedentResolution { doc: out, clusters: finished.into_iter().map(|(_, c)| c).collect() }
}
