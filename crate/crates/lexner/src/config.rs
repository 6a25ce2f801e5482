//! Aggregate configuration loaded from `--config` JSON files.

use crate::coref::CorefConfig;
use crate::corpus::SelectConfig;
use crate::error::Result;
use crate::provision::ProvisionConfig;
use crate::segment::SegmentConfig;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Every tunable of the pipeline in one place. Any subset may appear in the
/// JSON file; missing fields keep their defaults.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    pub segment: SegmentConfig,
    pub coref: CorefConfig,
    pub provision: ProvisionConfig,
    pub select: SelectConfig,
    /// Additional acronym -> full statute name entries, merged over the
    /// bundled defaults.
    pub extra_acronyms: BTreeMap<String, String>,
}

impl PipelineConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let content = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&content)?)
    }

    pub fn acronyms(&self) -> crate::coref::AcronymTable {
        crate::coref::AcronymTable::with_extras(&self.extra_acronyms)
    }
}
