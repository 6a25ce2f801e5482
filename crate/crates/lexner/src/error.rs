//! Error type shared across the crate.

use crate::doc::Violation;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A string could not be parsed as one of the 14 entity labels.
    #[error("invalid entity label: {0:?}")]
    InvalidLabel(String),

    /// A record in an annotation file could not be decoded.
    #[error("record {index}: {message}")]
    MalformedRecord { index: usize, message: String },

    /// A span's offsets fall outside the record text.
    #[error("record {index} ({doc_id}): span ({start}, {end}) out of bounds for text of {char_len} chars")]
    SpanOutOfBounds {
        index: usize,
        doc_id: String,
        start: usize,
        end: usize,
        char_len: usize,
    },

    /// Two identical (start, end, label) triples in one record.
    #[error("record {index} ({doc_id}): duplicate span ({start}, {end}, {label})")]
    DuplicateSpan {
        index: usize,
        doc_id: String,
        start: usize,
        end: usize,
        label: String,
    },

    /// Flat-annotation rule broken inside a single span list.
    #[error("overlapping spans in {context}: ({a_start}, {a_end}) and ({b_start}, {b_end})")]
    OverlappingSpans {
        context: String,
        a_start: usize,
        a_end: usize,
        b_start: usize,
        b_end: usize,
    },

    /// A document carries violations that block processing.
    #[error("document {doc_id} failed validation: {violations:?}")]
    InvalidDocument {
        doc_id: String,
        violations: Vec<Violation>,
    },

    #[error("configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
