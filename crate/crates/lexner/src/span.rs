//! Entity spans: flat, character-offset standoff annotations.

use crate::label::EntityLabel;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Identifier of a span, stable within its document.
///
/// Assigned at document construction from the canonical (start, end, label)
/// sort order, and preserved by every later transformation.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct SpanId(pub u32);

impl fmt::Display for SpanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Whether a span was annotated by a human or produced by a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanSource {
    Gold,
    Predicted,
}

/// One labeled character span.
///
/// Offsets count Unicode scalar values, not bytes, so spans survive
/// re-serialization across encodings. `start` is inclusive, `end` exclusive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EntitySpan {
    pub id: SpanId,
    pub start: usize,
    pub end: usize,
    pub label: EntityLabel,
    pub source: SpanSource,
}

impl EntitySpan {
    pub fn new(id: SpanId, start: usize, end: usize, label: EntityLabel, source: SpanSource) -> Self {
        Self { id, start, end, label, source }
    }

    /// Length in characters.
    pub fn len(&self) -> usize {
        self.end.saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// Identity triple used for set operations and duplicate detection.
    pub fn triple(&self) -> (usize, usize, EntityLabel) {
        (self.start, self.end, self.label)
    }

    /// True if the two spans share at least one character position.
    pub fn overlaps(&self, other: &EntitySpan) -> bool {
        self.start < other.end && other.start < self.end
    }

    /// True if `other` lies entirely inside `self` (proper or improper).
    pub fn contains(&self, other: &EntitySpan) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}
