//! Reading, writing and summarizing annotation corpora.
//!
//! The canonical format is JSON Lines, one record per line with fields
//! `id`/`text`/`spans`/`meta` and spans as `[start, end, "LABEL"]` triples
//! (character offsets). A [`FormatMapping`] adapts files with other field
//! names onto the same shape.

mod classify;
pub mod reference;
mod select;

pub use classify::{classify_case_type, classify_with, CaseType, CaseTypeKeywords, Classification, KeywordHit};
pub use select::{select_sentences, SelectConfig, SelectionOutcome};

use crate::doc::{DocType, JudgmentDoc};
use crate::error::{Error, Result};
use crate::label::EntityLabel;
use crate::span::{EntitySpan, SpanId, SpanSource};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// Dataset split a record belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Dev,
    Test,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Split::Train => "train",
            Split::Dev => "dev",
            Split::Test => "test",
        };
        f.write_str(s)
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().as_str() {
            "train" => Ok(Split::Train),
            "dev" => Ok(Split::Dev),
            "test" => Ok(Split::Test),
            other => Err(Error::Config(format!("unknown split {other:?}"))),
        }
    }
}

/// Record metadata under the canonical `meta` key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordMeta {
    pub unit: DocType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_url: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub court: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision_date: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_type: Option<String>,
}

impl Default for RecordMeta {
    fn default() -> Self {
        RecordMeta {
            unit: DocType::JudgmentSentence,
            split: None,
            source_url: None,
            court: None,
            decision_date: None,
            case_type: None,
        }
    }
}

/// One annotation unit in the canonical format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotationRecord {
    #[serde(rename = "id")]
    pub doc_id: String,
    pub text: String,
    #[serde(default)]
    pub spans: Vec<(usize, usize, EntityLabel)>,
    #[serde(default)]
    pub meta: RecordMeta,
}

impl AnnotationRecord {
    pub fn new(doc_id: impl Into<String>, unit: DocType, text: impl Into<String>) -> Self {
        AnnotationRecord {
            doc_id: doc_id.into(),
            text: text.into(),
            spans: Vec::new(),
            meta: RecordMeta { unit, ..RecordMeta::default() },
        }
    }

    pub fn with_spans(mut self, spans: Vec<(usize, usize, EntityLabel)>) -> Self {
        self.spans = spans;
        self
    }

    pub fn with_split(mut self, split: Split) -> Self {
        self.meta.split = Some(split);
        self
    }

    pub fn unit(&self) -> DocType {
        self.meta.unit
    }

    /// Spans as entity spans with ids from the canonical sort order.
    pub fn entity_spans(&self, source: SpanSource) -> Vec<EntitySpan> {
        let mut sorted = self.spans.clone();
        sorted.sort();
        sorted.dedup();
        sorted
            .into_iter()
            .enumerate()
            .map(|(i, (s, e, l))| EntitySpan::new(SpanId(i as u32), s, e, l, source))
            .collect()
    }
}

/// Maps a foreign file layout onto the canonical fields. Paths are
/// dot-separated and descend through objects and array indices
/// (`data.text`, `annotations.0.result`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct FormatMapping {
    pub id: String,
    pub text: String,
    pub spans: String,
    /// Paths within one span element; when absent, span elements are
    /// positional `[start, end, label]` triples.
    pub span_start: Option<String>,
    pub span_end: Option<String>,
    pub span_label: Option<String>,
    pub unit: Option<String>,
    pub default_unit: DocType,
    pub split: Option<String>,
    pub source_url: Option<String>,
}

impl Default for FormatMapping {
    fn default() -> Self {
        FormatMapping {
            id: "id".into(),
            text: "text".into(),
            spans: "spans".into(),
            span_start: None,
            span_end: None,
            span_label: None,
            unit: Some("meta.unit".into()),
            default_unit: DocType::JudgmentSentence,
            split: Some("meta.split".into()),
            source_url: Some("meta.source_url".into()),
        }
    }
}

impl FormatMapping {
    /// The canonical format's own mapping.
    pub fn canonical() -> Self {
        FormatMapping::default()
    }
}

fn lookup<'a>(value: &'a Value, path: &str) -> Option<&'a Value> {
    let mut cur = value;
    for seg in path.split('.') {
        cur = match cur {
            Value::Object(map) => map.get(seg)?,
            Value::Array(items) => items.get(seg.parse::<usize>().ok()?)?,
            _ => return None,
        };
    }
    Some(cur)
}

fn value_to_string(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// A non-fatal import finding, e.g. whitespace trimmed off a span.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImportWarning {
    pub record_index: usize,
    pub doc_id: String,
    pub message: String,
}

/// Records plus everything the importer had to tolerate.
#[derive(Debug, Clone, Default)]
pub struct ImportReport {
    pub records: Vec<AnnotationRecord>,
    pub warnings: Vec<ImportWarning>,
}

/// Import a JSONL file; the split is inferred from the file name when the
/// mapped field is absent.
pub fn import_corpus(path: &Path, mapping: &FormatMapping) -> Result<ImportReport> {
    let content = std::fs::read_to_string(path)?;
    let hint = path
        .file_name()
        .and_then(|n| n.to_str())
        .map(|n| n.to_lowercase())
        .and_then(|n| {
            ["train", "dev", "test"]
                .iter()
                .find(|s| n.contains(*s))
                .and_then(|s| s.parse().ok())
        });
    import_corpus_str(&content, mapping, hint)
}

/// Import from a string holding either JSON lines or one JSON array of
/// records (the shape most annotation tools export).
pub fn import_corpus_str(
    content: &str,
    mapping: &FormatMapping,
    split_hint: Option<Split>,
) -> Result<ImportReport> {
    let mut report = ImportReport::default();
    if content.trim_start().starts_with('[') {
        let items: Vec<Value> = serde_json::from_str(content)
            .map_err(|e| Error::MalformedRecord { index: 0, message: format!("invalid JSON array: {e}") })?;
        for (index, item) in items.iter().enumerate() {
            let record =
                import_value(index, item, mapping, split_hint, &mut report.warnings)?;
            report.records.push(record);
        }
    } else {
        for (index, line) in content.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let value: Value = serde_json::from_str(line).map_err(|e| Error::MalformedRecord {
                index,
                message: format!("invalid JSON: {e}"),
            })?;
            let record =
                import_value(index, &value, mapping, split_hint, &mut report.warnings)?;
            report.records.push(record);
        }
    }
    // The contract: everything the importer accepts passes validation with
    // zero error-severity findings.
    for (index, rec) in report.records.iter().enumerate() {
        let errors = record_to_doc(rec).validate_errors();
        if !errors.is_empty() {
            return Err(Error::InvalidDocument {
                doc_id: format!("{} (record {index})", rec.doc_id),
                violations: errors,
            });
        }
    }
    Ok(report)
}

fn import_value(
    index: usize,
    value: &Value,
    mapping: &FormatMapping,
    split_hint: Option<Split>,
    warnings: &mut Vec<ImportWarning>,
) -> Result<AnnotationRecord> {
    let malformed = |message: String| Error::MalformedRecord { index, message };

    let doc_id = lookup(value, &mapping.id)
        .and_then(value_to_string)
        .ok_or_else(|| malformed(format!("missing id field {:?}", mapping.id)))?;
    let text = lookup(value, &mapping.text)
        .and_then(|v| v.as_str().map(str::to_string))
        .ok_or_else(|| malformed(format!("missing text field {:?}", mapping.text)))?;

    let chars: Vec<char> = text.chars().collect();
    let char_len = chars.len();

    let mut spans: Vec<(usize, usize, EntityLabel)> = Vec::new();
    if let Some(raw) = lookup(value, &mapping.spans) {
        let items = raw
            .as_array()
            .ok_or_else(|| malformed(format!("spans field {:?} is not an array", mapping.spans)))?;
        for (si, item) in items.iter().enumerate() {
            let (start, end, label_str) = extract_span(item, mapping)
                .ok_or_else(|| malformed(format!("span {si} is malformed")))?;
            let label: EntityLabel = label_str
                .parse()
                .map_err(|e| malformed(format!("span {si}: {e}")))?;
            if start >= end {
                return Err(malformed(format!("span {si} ({start}, {end}): start ≥ end")));
            }
            if end > char_len {
                return Err(Error::SpanOutOfBounds {
                    index,
                    doc_id: doc_id.clone(),
                    start,
                    end,
                    char_len,
                });
            }
            // Trim surrounding whitespace, recording that offsets moved.
            let (mut s, mut e) = (start, end);
            while s < e && chars[s].is_whitespace() {
                s += 1;
            }
            while e > s && chars[e - 1].is_whitespace() {
                e -= 1;
            }
            if s == e {
                return Err(malformed(format!("span {si} ({start}, {end}) is all whitespace")));
            }
            if (s, e) != (start, end) {
                warnings.push(ImportWarning {
                    record_index: index,
                    doc_id: doc_id.clone(),
                    message: format!("span ({start}, {end}) trimmed to ({s}, {e})"),
                });
            }
            spans.push((s, e, label));
        }
    }

    let mut seen = BTreeSet::new();
    for &(s, e, l) in &spans {
        if !seen.insert((s, e, l)) {
            return Err(Error::DuplicateSpan {
                index,
                doc_id,
                start: s,
                end: e,
                label: l.to_string(),
            });
        }
    }
    let mut sorted = spans.clone();
    sorted.sort();
    for pair in sorted.windows(2) {
        if pair[1].0 < pair[0].1 {
            return Err(Error::OverlappingSpans {
                context: format!("record {index} ({doc_id})"),
                a_start: pair[0].0,
                a_end: pair[0].1,
                b_start: pair[1].0,
                b_end: pair[1].1,
            });
        }
    }

    let unit = match mapping.unit.as_deref().and_then(|p| lookup(value, p)) {
        Some(v) => serde_json::from_value(v.clone())
            .map_err(|_| malformed(format!("invalid unit type {v}")))?,
        None => mapping.default_unit,
    };
    let split = mapping
        .split
        .as_deref()
        .and_then(|p| lookup(value, p))
        .and_then(|v| v.as_str().map(str::to_lowercase))
        .map(|s| s.parse::<Split>())
        .transpose()
        .map_err(|e| malformed(e.to_string()))?
        .or(split_hint);
    let source_url = mapping
        .source_url
        .as_deref()
        .and_then(|p| lookup(value, p))
        .and_then(|v| v.as_str().map(str::to_string));

    Ok(AnnotationRecord {
        doc_id,
        text,
        spans: sorted,
        meta: RecordMeta { unit, split, source_url, ..RecordMeta::default() },
    })
}

fn extract_span(item: &Value, mapping: &FormatMapping) -> Option<(usize, usize, String)> {
    match (&mapping.span_start, &mapping.span_end, &mapping.span_label) {
        (Some(sp), Some(ep), Some(lp)) => {
            let start = lookup(item, sp)?.as_u64()? as usize;
            let end = lookup(item, ep)?.as_u64()? as usize;
            let label = lookup(item, lp)?.as_str()?.to_string();
            Some((start, end, label))
        }
        _ => {
            let arr = item.as_array()?;
            if arr.len() != 3 {
                return None;
            }
            let start = arr[0].as_u64()? as usize;
            let end = arr[1].as_u64()? as usize;
            let label = arr[2].as_str()?.to_string();
            Some((start, end, label))
        }
    }
}

/// Serialize records to canonical JSON Lines.
pub fn export_corpus(records: &[AnnotationRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(rec).expect("record serializes"));
        out.push('\n');
    }
    out
}

/// Build a validated document view of one record.
pub fn record_to_doc(rec: &AnnotationRecord) -> JudgmentDoc {
    let char_len = rec.text.chars().count();
    let doc = JudgmentDoc::new(rec.doc_id.clone(), rec.text.clone())
        .with_meta(crate::doc::DocMeta {
            court: rec.meta.court.clone(),
            decision_date: rec.meta.decision_date.clone(),
            case_type: rec.meta.case_type.clone(),
        })
        .with_spans(&rec.spans, SpanSource::Gold);
    match rec.unit() {
        DocType::Preamble => doc.with_preamble_end(char_len),
        DocType::JudgmentSentence => {
            let chars: Vec<char> = rec.text.chars().collect();
            let start = chars.iter().position(|c| !c.is_whitespace());
            let end = chars.iter().rposition(|c| !c.is_whitespace()).map(|i| i + 1);
            match (start, end) {
                (Some(s), Some(e)) => doc.with_sentences(vec![(s, e)]),
                _ => doc,
            }
        }
        DocType::FullJudgment => doc,
    }
}

/// Entity counts by region.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCounts {
    pub judgment: usize,
    pub preamble: usize,
}

/// Counts for one split.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SplitStats {
    pub preambles: usize,
    pub judgment_sentences: usize,
    pub full_judgments: usize,
    pub entities: usize,
    pub by_label: BTreeMap<EntityLabel, RegionCounts>,
}

/// Corpus statistics, grouped by split.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub splits: BTreeMap<String, SplitStats>,
    pub total: SplitStats,
}

impl SplitStats {
    fn add(&mut self, rec: &AnnotationRecord) {
        match rec.unit() {
            DocType::Preamble => self.preambles += 1,
            DocType::JudgmentSentence => self.judgment_sentences += 1,
            DocType::FullJudgment => self.full_judgments += 1,
        }
        for &(_, _, label) in &rec.spans {
            self.entities += 1;
            let counts = self.by_label.entry(label).or_default();
            match rec.unit() {
                DocType::Preamble => counts.preamble += 1,
                _ => counts.judgment += 1,
            }
        }
    }
}

/// Exact counts by split, unit type and label. Permutation-invariant.
pub fn compute_stats(records: &[AnnotationRecord]) -> CorpusStats {
    let mut stats = CorpusStats::default();
    for rec in records {
        let key = rec
            .meta
            .split
            .map(|s| s.to_string())
            .unwrap_or_else(|| "unspecified".to_string());
        stats.splits.entry(key).or_default().add(rec);
        stats.total.add(rec);
    }
    stats
}
