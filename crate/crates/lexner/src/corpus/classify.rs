//! Keyword-based case-type classification.
//!
//! A judgment mentioning the "income tax act" is most probably a Tax case.
//! Each case type carries a list of key act names; matching is
//! case-insensitive whole-phrase. When several types match, the fixed
//! priority order below decides, and every hit is surfaced so callers can
//! re-decide.

use serde::{Deserialize, Serialize};
use std::fmt;

/// The eight case types, in priority order, plus Unclassified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseType {
    Tax,
    Criminal,
    Civil,
    MotorVehicles,
    LandProperty,
    IndustrialLabour,
    Constitution,
    Financial,
    Unclassified,
}

impl fmt::Display for CaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseType::Tax => "Tax",
            CaseType::Criminal => "Criminal",
            CaseType::Civil => "Civil",
            CaseType::MotorVehicles => "Motor Vehicles",
            CaseType::LandProperty => "Land & Property",
            CaseType::IndustrialLabour => "Industrial & Labour",
            CaseType::Constitution => "Constitution",
            CaseType::Financial => "Financial",
            CaseType::Unclassified => "Unclassified",
        };
        f.write_str(s)
    }
}

/// Keyword table, one row per case type, checked in row order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CaseTypeKeywords(pub Vec<(CaseType, Vec<String>)>);

impl Default for CaseTypeKeywords {
    fn default() -> Self {
        fn row(case_type: CaseType, keywords: &[&str]) -> (CaseType, Vec<String>) {
            (case_type, keywords.iter().map(|k| k.to_string()).collect())
        }
        CaseTypeKeywords(vec![
            row(CaseType::Tax, &["tax act", "excise act", "customs act", "goods and services act"]),
            row(CaseType::Criminal, &["ipc", "penal code", "criminal procedure"]),
            row(CaseType::Civil, &["civil procedure", "family courts", "marriage act", "wakf act"]),
            row(CaseType::MotorVehicles, &["motor vehicles act", "mv act", "imv act"]),
            row(
                CaseType::LandProperty,
                &["land acquisition act", "succession act", "rent control act"],
            ),
            row(
                CaseType::IndustrialLabour,
                &["companies act", "industrial disputes act", "compensation act"],
            ),
            row(CaseType::Constitution, &["constitution"]),
            row(
                CaseType::Financial,
                &["negotiable instruments act", "sarfaesi act", "foreign exchange regulation act"],
            ),
        ])
    }
}

/// One keyword found in the text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeywordHit {
    pub case_type: CaseType,
    pub keyword: String,
}

/// Classification outcome with the full evidence trail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub case_type: CaseType,
    pub matched_keywords: Vec<KeywordHit>,
}

/// Case-insensitive whole-phrase containment: the phrase's edges must not
/// touch alphanumeric characters, so "mv act" does not fire inside "imv act".
fn contains_phrase(haystack_lower: &str, phrase: &str) -> bool {
    let mut from = 0;
    while let Some(at) = haystack_lower[from..].find(phrase) {
        let at = from + at;
        let before_ok = haystack_lower[..at]
            .chars()
            .next_back()
            .map(|c| !c.is_alphanumeric())
            .unwrap_or(true);
        let after_ok = haystack_lower[at + phrase.len()..]
            .chars()
            .next()
            .map(|c| !c.is_alphanumeric())
            .unwrap_or(true);
        if before_ok && after_ok {
            return true;
        }
        from = at + phrase.len();
    }
    false
}

/// Classify with a custom keyword table.
pub fn classify_with(text: &str, table: &CaseTypeKeywords) -> Classification {
    let lower = text.to_lowercase();
    let mut matched_keywords = Vec::new();
    for (case_type, keywords) in &table.0 {
        for keyword in keywords {
            if contains_phrase(&lower, &keyword.to_lowercase()) {
                matched_keywords.push(KeywordHit { case_type: *case_type, keyword: keyword.clone() });
            }
        }
    }
    let case_type = matched_keywords
        .first()
        .map(|hit| hit.case_type)
        .unwrap_or(CaseType::Unclassified);
    Classification { case_type, matched_keywords }
}

/// Classify with the bundled keyword table.
pub fn classify_case_type(text: &str) -> Classification {
    classify_with(text, &CaseTypeKeywords::default())
}
