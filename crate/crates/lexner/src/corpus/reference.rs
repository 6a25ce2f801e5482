//! Reference counts for the published corpus splits.
//!
//! The `stats` command reports deltas against these values rather than hard
//! failing, because the published files may be revised over time.

use super::SplitStats;
use crate::label::EntityLabel;
use serde::{Deserialize, Serialize};

/// Aggregate counts for one split of the published corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitReference {
    pub preambles: usize,
    pub judgment_sentences: usize,
    pub entities: usize,
}

pub const TRAIN: SplitReference =
    SplitReference { preambles: 1560, judgment_sentences: 9435, entities: 29964 };
pub const DEV: SplitReference =
    SplitReference { preambles: 125, judgment_sentences: 949, entities: 3216 };
pub const TEST: SplitReference =
    SplitReference { preambles: 441, judgment_sentences: 4060, entities: 13365 };

/// Training-split entity counts as (label, judgment count, preamble count);
/// `None` marks regions where the label is never annotated.
pub const TRAIN_LABEL_COUNTS: [(EntityLabel, Option<usize>, Option<usize>); 14] = [
    (EntityLabel::Court, Some(1293), Some(1074)),
    (EntityLabel::Petitioner, Some(464), Some(2604)),
    (EntityLabel::Respondent, Some(324), Some(3538)),
    (EntityLabel::Judge, Some(567), Some(1758)),
    (EntityLabel::Lawyer, None, Some(3505)),
    (EntityLabel::Date, Some(1885), None),
    (EntityLabel::Org, Some(1441), None),
    (EntityLabel::Gpe, Some(1398), None),
    (EntityLabel::Statute, Some(1804), None),
    (EntityLabel::Provision, Some(2384), None),
    (EntityLabel::Precedent, Some(1351), None),
    (EntityLabel::CaseNumber, Some(1040), None),
    (EntityLabel::Witness, Some(881), None),
    (EntityLabel::OtherPerson, Some(2653), None),
];

/// Test-split gold profile as (label, count, average character length).
pub const TEST_LABEL_PROFILE: [(EntityLabel, usize, usize); 14] = [
    (EntityLabel::Court, 1231, 25),
    (EntityLabel::Petitioner, 835, 20),
    (EntityLabel::Respondent, 1125, 34),
    (EntityLabel::Judge, 580, 15),
    (EntityLabel::Lawyer, 1813, 16),
    (EntityLabel::Date, 1111, 11),
    (EntityLabel::Org, 920, 18),
    (EntityLabel::Gpe, 711, 8),
    (EntityLabel::Statute, 971, 17),
    (EntityLabel::Provision, 1220, 14),
    (EntityLabel::Precedent, 634, 62),
    (EntityLabel::CaseNumber, 683, 23),
    (EntityLabel::Witness, 446, 12),
    (EntityLabel::OtherPerson, 1085, 12),
];

/// One expected-vs-actual line of the delta report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub metric: String,
    pub expected: i64,
    pub actual: i64,
    pub delta: i64,
}

fn delta(metric: impl Into<String>, expected: usize, actual: usize) -> Delta {
    let (expected, actual) = (expected as i64, actual as i64);
    Delta { metric: metric.into(), expected, actual, delta: actual - expected }
}

/// Compare computed stats for one split against the reference counts.
/// Returns every metric; a clean reproduction has all deltas at zero.
pub fn split_deltas(stats: &SplitStats, split: super::Split) -> Vec<Delta> {
    let reference = match split {
        super::Split::Train => TRAIN,
        super::Split::Dev => DEV,
        super::Split::Test => TEST,
    };
    let mut out = vec![
        delta("preambles", reference.preambles, stats.preambles),
        delta("judgment_sentences", reference.judgment_sentences, stats.judgment_sentences),
        delta("entities", reference.entities, stats.entities),
    ];
    if split == super::Split::Train {
        for (label, judgment, preamble) in TRAIN_LABEL_COUNTS {
            let actual = stats.by_label.get(&label).copied().unwrap_or_default();
            if let Some(expected) = judgment {
                out.push(delta(format!("{label}/judgment"), expected, actual.judgment));
            }
            if let Some(expected) = preamble {
                out.push(delta(format!("{label}/preamble"), expected, actual.preamble));
            }
        }
    }
    out
}

/// Only the mismatching lines.
pub fn nonzero_deltas(stats: &SplitStats, split: super::Split) -> Vec<Delta> {
    split_deltas(stats, split)
        .into_iter()
        .filter(|d| d.delta != 0)
        .collect()
}
