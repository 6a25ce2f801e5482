//! Scoring predicted spans against gold spans.
//!
//! Two schemes:
//! - STRICT: a prediction counts only when boundary and entity class both
//!   match a gold span exactly.
//! - TYPE_MATCH: any overlap with a gold span of the same entity class
//!   counts; matching is greedy one-to-one with predictions processed in
//!   document order. Each gold matches at most one prediction and vice
//!   versa. Unmatched predictions are false positives, unmatched golds
//!   false negatives.

use crate::error::{Error, Result};
use crate::label::EntityLabel;
use crate::span::EntitySpan;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatchScheme {
    Strict,
    TypeMatch,
}

/// Counts and derived fractions for one label (or the micro overall).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct LabelMetrics {
    #[serde(rename = "tp")]
    pub true_positives: usize,
    #[serde(rename = "fp")]
    pub false_positives: usize,
    #[serde(rename = "fn")]
    pub false_negatives: usize,
    /// Number of gold spans.
    pub support: usize,
    /// Mean character length of gold spans; 0 when support is 0.
    pub avg_gold_len: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Per-label and overall scores under one scheme.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub scheme: MatchScheme,
    pub per_label: BTreeMap<EntityLabel, LabelMetrics>,
    pub overall: LabelMetrics,
}

#[derive(Debug, Clone, Default)]
struct Counts {
    tp: BTreeMap<EntityLabel, usize>,
    fp: BTreeMap<EntityLabel, usize>,
    fn_: BTreeMap<EntityLabel, usize>,
    support: BTreeMap<EntityLabel, usize>,
    gold_len_sum: BTreeMap<EntityLabel, usize>,
}

impl Counts {
    fn merge(&mut self, other: Counts) {
        for (map, src) in [
            (&mut self.tp, other.tp),
            (&mut self.fp, other.fp),
            (&mut self.fn_, other.fn_),
            (&mut self.support, other.support),
            (&mut self.gold_len_sum, other.gold_len_sum),
        ] {
            for (k, v) in src {
                *map.entry(k).or_default() += v;
            }
        }
    }

    fn into_report(self, scheme: MatchScheme) -> EvalReport {
        fn metrics(tp: usize, fp: usize, fn_: usize, support: usize, len_sum: usize) -> LabelMetrics {
            let precision = if tp + fp == 0 { 0.0 } else { tp as f64 / (tp + fp) as f64 };
            let recall = if tp + fn_ == 0 { 0.0 } else { tp as f64 / (tp + fn_) as f64 };
            let f1 = if precision + recall == 0.0 {
                0.0
            } else {
                2.0 * precision * recall / (precision + recall)
            };
            let avg_gold_len = if support == 0 { 0.0 } else { len_sum as f64 / support as f64 };
            LabelMetrics {
                true_positives: tp,
                false_positives: fp,
                false_negatives: fn_,
                support,
                avg_gold_len,
                precision,
                recall,
                f1,
            }
        }

        let mut labels: Vec<EntityLabel> = self
            .tp
            .keys()
            .chain(self.fp.keys())
            .chain(self.fn_.keys())
            .chain(self.support.keys())
            .copied()
            .collect();
        labels.sort();
        labels.dedup();

        let mut per_label = BTreeMap::new();
        let (mut tp, mut fp, mut fn_, mut support, mut len_sum) = (0, 0, 0, 0, 0);
        for label in labels {
            let get = |m: &BTreeMap<EntityLabel, usize>| m.get(&label).copied().unwrap_or(0);
            let (t, f, n, s, l) = (
                get(&self.tp),
                get(&self.fp),
                get(&self.fn_),
                get(&self.support),
                get(&self.gold_len_sum),
            );
            per_label.insert(label, metrics(t, f, n, s, l));
            tp += t;
            fp += f;
            fn_ += n;
            support += s;
            len_sum += l;
        }
        // Overall counts are micro-aggregated sums over labels.
        EvalReport { scheme, per_label, overall: metrics(tp, fp, fn_, support, len_sum) }
    }
}

/// Reject lists that break the flat-annotation invariant.
fn check_flat(spans: &[EntitySpan], context: &str) -> Result<()> {
    let mut sorted: Vec<&EntitySpan> = spans.iter().collect();
    sorted.sort_by_key(|s| (s.start, s.end));
    for pair in sorted.windows(2) {
        if pair[0].overlaps(pair[1]) {
            return Err(Error::OverlappingSpans {
                context: context.to_string(),
                a_start: pair[0].start,
                a_end: pair[0].end,
                b_start: pair[1].start,
                b_end: pair[1].end,
            });
        }
    }
    Ok(())
}

fn unit_counts(gold: &[EntitySpan], pred: &[EntitySpan], scheme: MatchScheme) -> Result<Counts> {
    check_flat(gold, "gold list")?;
    check_flat(pred, "prediction list")?;

    let mut gold_sorted: Vec<&EntitySpan> = gold.iter().collect();
    gold_sorted.sort_by_key(|s| (s.start, s.end));
    let mut pred_sorted: Vec<&EntitySpan> = pred.iter().collect();
    pred_sorted.sort_by_key(|s| (s.start, s.end));

    let mut counts = Counts::default();
    for g in &gold_sorted {
        *counts.support.entry(g.label).or_default() += 1;
        *counts.gold_len_sum.entry(g.label).or_default() += g.len();
    }

    let mut gold_used = vec![false; gold_sorted.len()];
    for p in &pred_sorted {
        let hit = gold_sorted.iter().enumerate().position(|(gi, g)| {
            if gold_used[gi] || g.label != p.label {
                return false;
            }
            match scheme {
                MatchScheme::Strict => g.start == p.start && g.end == p.end,
                MatchScheme::TypeMatch => g.overlaps(p),
            }
        });
        match hit {
            Some(gi) => {
                gold_used[gi] = true;
                *counts.tp.entry(p.label).or_default() += 1;
            }
            None => *counts.fp.entry(p.label).or_default() += 1,
        }
    }
    for (gi, g) in gold_sorted.iter().enumerate() {
        if !gold_used[gi] {
            *counts.fn_.entry(g.label).or_default() += 1;
        }
    }
    Ok(counts)
}

/// Score one evaluation unit (a sentence or a preamble).
pub fn score(gold: &[EntitySpan], pred: &[EntitySpan], scheme: MatchScheme) -> Result<EvalReport> {
    Ok(unit_counts(gold, pred, scheme)?.into_report(scheme))
}

/// Score many (gold, pred) units jointly; counts merge by summation, so the
/// result is independent of unit order and of any parallel split.
pub fn score_units<'a, I>(units: I, scheme: MatchScheme) -> Result<EvalReport>
where
    I: IntoIterator<Item = (&'a [EntitySpan], &'a [EntitySpan])>,
{
    let mut total = Counts::default();
    for (gold, pred) in units {
        total.merge(unit_counts(gold, pred, scheme)?);
    }
    Ok(total.into_report(scheme))
}

/// Render the entity-wise table: Count, Avg. Len., F1, Type match F1 per
/// label plus an Overall row. F1 columns are percentages to one decimal;
/// machine output keeps full precision.
pub fn per_entity_table(strict: &EvalReport, type_match: &EvalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:>7} {:>10} {:>6} {:>15}",
        "Entity", "Count", "Avg. Len.", "F1", "Type match F1"
    );
    let empty = LabelMetrics::default();
    let mut row = |name: &str, s: &LabelMetrics, t: &LabelMetrics| {
        let _ = writeln!(
            out,
            "{:<14} {:>7} {:>10} {:>6.1} {:>15.1}",
            name,
            s.support,
            s.avg_gold_len.round() as i64,
            s.f1 * 100.0,
            t.f1 * 100.0
        );
    };
    for label in EntityLabel::ALL {
        let s = strict.per_label.get(&label).unwrap_or(&empty);
        let t = type_match.per_label.get(&label).unwrap_or(&empty);
        row(label.as_str(), s, t);
    }
    row("Overall", &strict.overall, &type_match.overall);
    out
}
