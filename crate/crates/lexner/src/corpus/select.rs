//! Selecting entity-rich units for annotation.
//!
//! Legal entities are sparse: most judgment sentences carry none, and a
//! random sample wastes annotator time. Selection greedily prefers sentences
//! whose predicted entities are rare (summed inverse label frequency),
//! reducing class imbalance, then tops the set up with a configurable
//! fraction of zero-entity sentences. Very short units, units with
//! non-English characters, and preambles with side-by-side party-name
//! columns are excluded first.

use super::AnnotationRecord;
use crate::doc::DocType;
use crate::label::EntityLabel;
use crate::textnorm::normalize;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SelectConfig {
    /// Target number of selected entities per label.
    pub per_label_quota: usize,
    /// Overrides for individual labels.
    pub quota_overrides: BTreeMap<EntityLabel, usize>,
    /// Fraction of zero-entity sentences appended after the greedy pass.
    pub zero_entity_fraction: f64,
    /// Units with fewer whitespace tokens than this are discarded.
    pub min_tokens: usize,
    /// A preamble line with an internal run of at least this many spaces
    /// separating two name-like segments marks side-by-side party names.
    pub side_by_side_gap: usize,
    /// Seed for the deterministic zero-entity draw.
    pub seed: u64,
}

impl Default for SelectConfig {
    fn default() -> Self {
        SelectConfig {
            per_label_quota: 50,
            quota_overrides: BTreeMap::new(),
            zero_entity_fraction: 0.1,
            min_tokens: 5,
            side_by_side_gap: 6,
            seed: 0,
        }
    }
}

impl SelectConfig {
    fn quota(&self, label: EntityLabel) -> usize {
        self.quota_overrides.get(&label).copied().unwrap_or(self.per_label_quota)
    }
}

/// Selection result with per-filter drop counts.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SelectionOutcome {
    pub selected: Vec<AnnotationRecord>,
    pub dropped_short: usize,
    pub dropped_non_english: usize,
    pub dropped_side_by_side: usize,
    pub dropped_duplicate: usize,
}

/// Any letter outside Basic Latin disqualifies a unit; legal punctuation and
/// symbols are ignored since they are not alphabetic.
fn has_non_english_letter(text: &str) -> bool {
    text.chars().any(|c| c.is_alphabetic() && !c.is_ascii())
}

fn name_like(segment: &str) -> bool {
    segment.chars().filter(|c| c.is_alphabetic()).count() >= 2
}

/// Detect party names written side by side on one line, e.g.
/// `Amit Kumar            ...Petitioner`.
fn has_side_by_side_columns(text: &str, gap: usize) -> bool {
    for line in text.lines() {
        let mut run_start = None;
        let chars: Vec<char> = line.chars().collect();
        for (i, &c) in chars.iter().enumerate() {
            if c == ' ' {
                run_start.get_or_insert(i);
            } else {
                if let Some(start) = run_start.take() {
                    if i - start >= gap {
                        let left: String = chars[..start].iter().collect();
                        let right: String = chars[i..].iter().collect();
                        if name_like(&left) && name_like(&right) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// SplitMix64; a full RNG dependency is not warranted for one shuffle.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Select units for annotation. Deterministic for a fixed seed and input
/// order; the output is a filtered, deduplicated subset in input order.
pub fn select_sentences(units: &[AnnotationRecord], cfg: &SelectConfig) -> SelectionOutcome {
    let mut outcome = SelectionOutcome::default();

    // Exclusion filters, then dedup by normalized text.
    let mut seen_texts: BTreeSet<String> = BTreeSet::new();
    let mut candidates: Vec<usize> = Vec::new();
    for (i, unit) in units.iter().enumerate() {
        if unit.text.split_whitespace().count() < cfg.min_tokens {
            outcome.dropped_short += 1;
            continue;
        }
        if has_non_english_letter(&unit.text) {
            outcome.dropped_non_english += 1;
            continue;
        }
        if unit.unit() == DocType::Preamble
            && has_side_by_side_columns(&unit.text, cfg.side_by_side_gap)
        {
            outcome.dropped_side_by_side += 1;
            continue;
        }
        if !seen_texts.insert(normalize(&unit.text)) {
            outcome.dropped_duplicate += 1;
            continue;
        }
        candidates.push(i);
    }

    // Label frequencies over the candidate pool drive the inverse weights.
    let mut freq: BTreeMap<EntityLabel, usize> = BTreeMap::new();
    for &i in &candidates {
        for &(_, _, label) in &units[i].spans {
            *freq.entry(label).or_default() += 1;
        }
    }

    let score = |i: usize| -> f64 {
        units[i]
            .spans
            .iter()
            .map(|&(_, _, label)| 1.0 / freq[&label] as f64)
            .sum()
    };

    let mut entity_order: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| !units[i].spans.is_empty())
        .collect();
    // Stable by construction: ties keep input order.
    entity_order.sort_by(|&a, &b| score(b).partial_cmp(&score(a)).unwrap());

    let mut selected_count: BTreeMap<EntityLabel, usize> = BTreeMap::new();
    let mut picked: Vec<usize> = Vec::new();
    for &i in &entity_order {
        let helps = units[i]
            .spans
            .iter()
            .any(|&(_, _, label)| selected_count.get(&label).copied().unwrap_or(0) < cfg.quota(label));
        if !helps {
            continue;
        }
        for &(_, _, label) in &units[i].spans {
            *selected_count.entry(label).or_default() += 1;
        }
        picked.push(i);
        let done = freq
            .keys()
            .all(|&label| selected_count.get(&label).copied().unwrap_or(0) >= cfg.quota(label));
        if done {
            break;
        }
    }

    // Zero-entity top-up, drawn with the seeded generator.
    let mut zeros: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| units[i].spans.is_empty())
        .collect();
    let want = (cfg.zero_entity_fraction * picked.len() as f64).ceil() as usize;
    let mut rng = SplitMix64(cfg.seed.wrapping_add(0x5851f42d4c957f2d));
    for k in (1..zeros.len()).rev() {
        let j = (rng.next() % (k as u64 + 1)) as usize;
        zeros.swap(k, j);
    }
    picked.extend(zeros.into_iter().take(want));

    picked.sort();
    outcome.selected = picked.into_iter().map(|i| units[i].clone()).collect();
    outcome
}
