//! Acronym table for statute coreference.
//!
//! Matching is case-sensitive on the keys (IPC is an acronym, "ipc" inside an
//! ordinary word is not); keys are unique after whitespace normalization.
//! The bundled defaults cover the acronyms that dominate Indian judgments;
//! users extend the table through configuration.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AcronymTable {
    entries: BTreeMap<String, String>,
}

impl Default for AcronymTable {
    fn default() -> Self {
        let mut table = AcronymTable { entries: BTreeMap::new() };
        for (k, v) in [
            ("IPC", "Indian Penal Code"),
            ("CrPC", "Code of Criminal Procedure"),
            ("CPC", "Code of Civil Procedure"),
            ("NI Act", "Negotiable Instruments Act"),
            ("MV Act", "Motor Vehicles Act"),
        ] {
            table.insert(k, v);
        }
        table
    }
}

fn normalize_key(key: &str) -> String {
    key.split_whitespace().collect::<Vec<_>>().join(" ")
}

impl AcronymTable {
    pub fn empty() -> Self {
        AcronymTable { entries: BTreeMap::new() }
    }

    /// Insert or replace a mapping; returns the previous full form, if any.
    pub fn insert(&mut self, acronym: &str, full_form: &str) -> Option<String> {
        self.entries.insert(normalize_key(acronym), full_form.to_string())
    }

    /// Exact, case-sensitive lookup after whitespace normalization.
    pub fn expand(&self, text: &str) -> Option<&str> {
        self.entries.get(&normalize_key(text)).map(String::as_str)
    }

    /// Bundled defaults extended with `extra` (extras win on key clashes).
    pub fn with_extras(extra: &BTreeMap<String, String>) -> Self {
        let mut table = AcronymTable::default();
        for (k, v) in extra {
            table.insert(k, v);
        }
        table
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
