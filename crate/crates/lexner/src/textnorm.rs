//! Text normalization helpers shared by reconciliation and coreference.
//!
//! "Exact match" throughout the crate means equality after [`normalize`]:
//! case-folded, internal whitespace collapsed, surrounding punctuation
//! stripped. Byte equality is too brittle for OCR-derived judgment text.

use std::collections::BTreeSet;

/// Canonical form of an entity string for matching purposes.
pub fn normalize(s: &str) -> String {
    let trimmed = s.trim_matches(|c: char| !c.is_alphanumeric());
    trimmed
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

/// Lowercased alphanumeric tokens (apostrophes kept so "Hon'ble" stays one token).
pub fn tokens(s: &str) -> Vec<String> {
    s.split(|c: char| !(c.is_alphanumeric() || c == '\''))
        .filter(|t| !t.is_empty())
        .map(|t| t.trim_matches('\'').to_lowercase())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Jaccard similarity of two token sets. Empty sets never match.
pub fn jaccard(a: &BTreeSet<String>, b: &BTreeSet<String>) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let inter = a.intersection(b).count();
    let union = a.len() + b.len() - inter;
    inter as f64 / union as f64
}

/// True when `needle` occurs as a contiguous run inside `hay`.
pub fn contains_token_run(hay: &[String], needle: &[String]) -> bool {
    if needle.is_empty() || needle.len() > hay.len() {
        return false;
    }
    hay.windows(needle.len()).any(|w| w == needle)
}
