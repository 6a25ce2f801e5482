//! Within-document coreference resolution for precedents and statutes.

pub mod acronyms;
mod precedent;
mod statute;

pub use acronyms::AcronymTable;
pub use precedent::{cluster_precedents, ParsedPrecedent, PrecedentCluster, PrecedentResolution};
pub use statute::{
    cluster_head_text, cluster_statutes, AliasCollision, StatuteCluster, StatuteResolution,
};

use serde::{Deserialize, Serialize};

/// Tunables for both cluster builders. Defaults follow the rule set used
/// throughout the crate; every knob is exposed because judgment formatting
/// varies wildly across courts and decades.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct CorefConfig {
    /// How many characters after an ORG/OTHER_PERSON span to look for a
    /// referent keyword such as "supra".
    pub referent_window: usize,
    /// Keywords marking a precedent referent.
    pub referent_keywords: Vec<String>,
    /// Minimum Jaccard similarity between party token sets for two
    /// precedent mentions to land in one cluster.
    pub party_jaccard: f64,
    /// Party-name separators, matched case-insensitively between spaces.
    pub party_separators: Vec<String>,
    /// Reporter citation patterns (regex source strings).
    pub citation_patterns: Vec<String>,
    /// How many characters after a STATUTE span a parenthetical may open.
    pub statute_paren_window: usize,
    /// Keywords inside a parenthetical that introduce a statute alias.
    pub brevity_keywords: Vec<String>,
}

impl Default for CorefConfig {
    fn default() -> Self {
        CorefConfig {
            referent_window: 12,
            referent_keywords: vec!["supra".into(), "'s case".into()],
            party_jaccard: 0.8,
            party_separators: vec![
                " Vs ".into(),
                " vs ".into(),
                " v. ".into(),
                " versus ".into(),
                " VS ".into(),
            ],
            citation_patterns: vec![
                r"\(\d{4}\)\s*\d+\s*[A-Za-z][A-Za-z.]*\s*\d+".into(),
                r"\d{4}\s*\(\d+\)\s*[A-Za-z][A-Za-z.]*\s*\d+".into(),
                r"\bAIR\s+\d{4}\s+[A-Za-z][A-Za-z.]*\s*\d+".into(),
            ],
            statute_paren_window: 40,
            brevity_keywords: vec![
                "for brevity".into(),
                "for short".into(),
                "in short".into(),
                "hereinafter".into(),
            ],
        }
    }
}
