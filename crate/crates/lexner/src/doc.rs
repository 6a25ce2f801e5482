//! Judgment documents: text, preamble split, sentence bounds and spans.

use crate::label::{EntityLabel, Region};
use crate::span::{EntitySpan, SpanId, SpanSource};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Annotation unit granularity.
///
/// Preambles are annotated whole; judgment text is annotated one sentence at
/// a time; full judgments are what the post-processing pipeline consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DocType {
    Preamble,
    JudgmentSentence,
    FullJudgment,
}

/// Optional document metadata.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub court: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision_date: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_type: Option<String>,
}

/// A judgment with its segmentation and attached entity spans.
///
/// Immutable after construction; all transformations return a new document.
/// All offsets are character offsets into `text`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JudgmentDoc {
    pub doc_id: String,
    pub text: String,
    /// Ordered, non-overlapping sentence ranges within the judgment region.
    #[serde(default)]
    pub sentence_bounds: Vec<(usize, usize)>,
    /// Offset where the judgment region begins; 0 means no preamble.
    #[serde(default)]
    pub preamble_end: usize,
    #[serde(default)]
    pub spans: Vec<EntitySpan>,
    #[serde(default, skip_serializing_if = "is_default_meta")]
    pub meta: DocMeta,
}

fn is_default_meta(m: &DocMeta) -> bool {
    *m == DocMeta::default()
}

/// How serious a validation finding is.
///
/// Errors break type invariants; warnings flag suspect but tolerated data,
/// such as a LAWYER span inside the judgment region (the gold corpus contains
/// such edge cases).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    SpanOrdering,
    SpanOutOfBounds,
    NestedSpan,
    OverlappingSpan,
    DuplicateSpan,
    SentenceOrdering,
    SentenceOutOfBounds,
    PreambleSplitsSentence,
    PreambleOutOfBounds,
    SpanCrossesSentence,
    LabelRegionMismatch,
}

/// One broken rule, naming the span or sentence involved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub severity: Severity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span_id: Option<SpanId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sentence: Option<usize>,
    pub message: String,
}

impl Violation {
    fn span(kind: ViolationKind, severity: Severity, id: SpanId, message: String) -> Self {
        Violation { kind, severity, span_id: Some(id), sentence: None, message }
    }

    fn sentence(kind: ViolationKind, index: usize, message: String) -> Self {
        Violation {
            kind,
            severity: Severity::Error,
            span_id: None,
            sentence: Some(index),
            message,
        }
    }
}

/// Character-offset to byte-offset map for one text.
///
/// Built once per document wherever text slices are needed; lookups are O(1).
pub struct CharMap {
    byte_offsets: Vec<usize>,
    total_bytes: usize,
}

impl CharMap {
    pub fn new(text: &str) -> Self {
        let byte_offsets: Vec<usize> = text.char_indices().map(|(b, _)| b).collect();
        CharMap { byte_offsets, total_bytes: text.len() }
    }

    /// Number of characters in the mapped text.
    pub fn char_len(&self) -> usize {
        self.byte_offsets.len()
    }

    /// Byte offset of character `char_idx`; the one-past-the-end index maps
    /// to the byte length.
    pub fn byte(&self, char_idx: usize) -> usize {
        if char_idx >= self.byte_offsets.len() {
            self.total_bytes
        } else {
            self.byte_offsets[char_idx]
        }
    }

    /// Slice `text` by character offsets. Panics if out of range.
    pub fn slice<'a>(&self, text: &'a str, start: usize, end: usize) -> &'a str {
        &text[self.byte(start)..self.byte(end)]
    }
}

impl JudgmentDoc {
    pub fn new(doc_id: impl Into<String>, text: impl Into<String>) -> Self {
        JudgmentDoc {
            doc_id: doc_id.into(),
            text: text.into(),
            sentence_bounds: Vec::new(),
            preamble_end: 0,
            spans: Vec::new(),
            meta: DocMeta::default(),
        }
    }

    /// Attach spans from (start, end, label) triples, assigning ids from the
    /// canonical sort order. Duplicate triples are collapsed here; the
    /// importer treats them as errors before this point.
    pub fn with_spans(mut self, triples: &[(usize, usize, EntityLabel)], source: SpanSource) -> Self {
        let mut sorted: Vec<(usize, usize, EntityLabel)> = triples.to_vec();
        sorted.sort();
        sorted.dedup();
        self.spans = sorted
            .into_iter()
            .enumerate()
            .map(|(i, (start, end, label))| {
                EntitySpan::new(SpanId(i as u32), start, end, label, source)
            })
            .collect();
        self
    }

    pub fn with_sentences(mut self, bounds: Vec<(usize, usize)>) -> Self {
        self.sentence_bounds = bounds;
        self
    }

    pub fn with_preamble_end(mut self, preamble_end: usize) -> Self {
        self.preamble_end = preamble_end;
        self
    }

    pub fn with_meta(mut self, meta: DocMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    pub fn char_map(&self) -> CharMap {
        CharMap::new(&self.text)
    }

    pub fn span_by_id(&self, id: SpanId) -> Option<&EntitySpan> {
        let guess = self.spans.get(id.0 as usize);
        match guess {
            Some(s) if s.id == id => guess,
            _ => self.spans.iter().find(|s| s.id == id),
        }
    }

    /// Which region a span sits in. Spans straddling the split count as
    /// judgment; validation flags them separately.
    pub fn region_of(&self, span: &EntitySpan) -> Region {
        if span.end <= self.preamble_end {
            Region::Preamble
        } else {
            Region::Judgment
        }
    }

    /// Index of the sentence wholly containing `span`, if any.
    pub fn sentence_index_of(&self, span: &EntitySpan) -> Option<usize> {
        self.sentence_bounds
            .iter()
            .position(|&(s, e)| s <= span.start && span.end <= e)
    }

    /// Check every type invariant; violations are data, not failures.
    ///
    /// Pure: the same document always yields the identical list.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let char_len = self.char_len();

        // Span-local rules.
        for span in &self.spans {
            if span.start >= span.end {
                out.push(Violation::span(
                    ViolationKind::SpanOrdering,
                    Severity::Error,
                    span.id,
                    format!("span {} ({}, {}): start ≥ end", span.id, span.start, span.end),
                ));
            }
            if span.end > char_len {
                out.push(Violation::span(
                    ViolationKind::SpanOutOfBounds,
                    Severity::Error,
                    span.id,
                    format!(
                        "span {} ({}, {}) exceeds text length {}",
                        span.id, span.start, span.end, char_len
                    ),
                ));
            }
        }

        // Flat-entity rule: no nesting, no overlap, no duplicates.
        let mut seen = BTreeSet::new();
        for span in &self.spans {
            if !seen.insert(span.triple()) {
                out.push(Violation::span(
                    ViolationKind::DuplicateSpan,
                    Severity::Error,
                    span.id,
                    format!("duplicate span ({}, {}, {})", span.start, span.end, span.label),
                ));
            }
        }
        let mut by_pos: Vec<&EntitySpan> = self.spans.iter().filter(|s| !s.is_empty()).collect();
        by_pos.sort_by_key(|s| (s.start, s.end, s.label));
        for pair in by_pos.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.overlaps(b) && a.triple() != b.triple() {
                let (kind, word) = if a.contains(b) || b.contains(a) {
                    (ViolationKind::NestedSpan, "nested span")
                } else {
                    (ViolationKind::OverlappingSpan, "overlapping span")
                };
                out.push(Violation::span(
                    kind,
                    Severity::Error,
                    b.id,
                    format!(
                        "{}: span {} ({}, {}) vs span {} ({}, {})",
                        word, b.id, b.start, b.end, a.id, a.start, a.end
                    ),
                ));
            }
        }

        // Sentence ranges: ordered, non-overlapping, in bounds.
        for (i, &(s, e)) in self.sentence_bounds.iter().enumerate() {
            if s >= e {
                out.push(Violation::sentence(
                    ViolationKind::SentenceOrdering,
                    i,
                    format!("sentence {i} ({s}, {e}): start ≥ end"),
                ));
            }
            if e > char_len {
                out.push(Violation::sentence(
                    ViolationKind::SentenceOutOfBounds,
                    i,
                    format!("sentence {i} ({s}, {e}) exceeds text length {char_len}"),
                ));
            }
            if i > 0 {
                let (_, prev_end) = self.sentence_bounds[i - 1];
                if s < prev_end {
                    out.push(Violation::sentence(
                        ViolationKind::SentenceOrdering,
                        i,
                        format!("sentence {i} starts at {s}, before previous end {prev_end}"),
                    ));
                }
            }
        }

        // Preamble split point.
        if self.preamble_end > char_len {
            out.push(Violation {
                kind: ViolationKind::PreambleOutOfBounds,
                severity: Severity::Error,
                span_id: None,
                sentence: None,
                message: format!(
                    "preamble_end {} exceeds text length {}",
                    self.preamble_end, char_len
                ),
            });
        }
        if self.preamble_end > 0 {
            if let Some(i) = self
                .sentence_bounds
                .iter()
                .position(|&(s, e)| s < self.preamble_end && self.preamble_end < e)
            {
                out.push(Violation::sentence(
                    ViolationKind::PreambleSplitsSentence,
                    i,
                    format!("preamble_end {} falls inside sentence {i}", self.preamble_end),
                ));
            }
        }

        // Spans must sit inside one sentence or inside the preamble region.
        for span in &self.spans {
            if span.is_empty() || span.end > char_len {
                continue;
            }
            let in_preamble = span.end <= self.preamble_end;
            if !in_preamble && !self.sentence_bounds.is_empty()
                && self.sentence_index_of(span).is_none()
            {
                out.push(Violation::span(
                    ViolationKind::SpanCrossesSentence,
                    Severity::Error,
                    span.id,
                    format!(
                        "span {} ({}, {}) is not contained in any single sentence",
                        span.id, span.start, span.end
                    ),
                ));
            }
            // Validity-domain breaches are warnings, not hard errors.
            let region = self.region_of(span);
            if !span.label.valid_in(region) {
                out.push(Violation::span(
                    ViolationKind::LabelRegionMismatch,
                    Severity::Warning,
                    span.id,
                    format!("span {} ({}) in {:?} region", span.id, span.label, region),
                ));
            }
        }

        out
    }

    /// Error-severity violations only.
    pub fn validate_errors(&self) -> Vec<Violation> {
        self.validate()
            .into_iter()
            .filter(|v| v.severity == Severity::Error)
            .collect()
    }

    /// Text of a span. Prefer a cached [`CharMap`] in hot paths.
    pub fn span_text(&self, span: &EntitySpan) -> String {
        self.char_map().slice(&self.text, span.start, span.end).to_string()
    }
}
