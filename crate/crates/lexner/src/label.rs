//! The 14 legal entity labels and where each one may occur.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Region of a judgment a span sits in.
///
/// The preamble is the formatted header (parties, judges, lawyers, court,
/// date); the judgment region is the free-text body that follows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Preamble,
    Judgment,
}

/// Which region(s) a label is valid in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelDomain {
    PreambleOnly,
    JudgmentOnly,
    Both,
}

/// Legal named entity classes.
///
/// Exactly 14 values; parsing any other string is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EntityLabel {
    Court,
    Petitioner,
    Respondent,
    Judge,
    Lawyer,
    Date,
    Org,
    Gpe,
    Statute,
    Provision,
    Precedent,
    CaseNumber,
    Witness,
    OtherPerson,
}

impl EntityLabel {
    /// All labels, in canonical reporting order.
    pub const ALL: [EntityLabel; 14] = [
        EntityLabel::Court,
        EntityLabel::Petitioner,
        EntityLabel::Respondent,
        EntityLabel::Judge,
        EntityLabel::Lawyer,
        EntityLabel::Date,
        EntityLabel::Org,
        EntityLabel::Gpe,
        EntityLabel::Statute,
        EntityLabel::Provision,
        EntityLabel::Precedent,
        EntityLabel::CaseNumber,
        EntityLabel::Witness,
        EntityLabel::OtherPerson,
    ];

    /// Where this label may legitimately be annotated.
    pub fn domain(self) -> LabelDomain {
        match self {
            EntityLabel::Court
            | EntityLabel::Petitioner
            | EntityLabel::Respondent
            | EntityLabel::Judge => LabelDomain::Both,
            EntityLabel::Lawyer => LabelDomain::PreambleOnly,
            _ => LabelDomain::JudgmentOnly,
        }
    }

    /// True if a span with this label is valid in `region`.
    pub fn valid_in(self, region: Region) -> bool {
        matches!(
            (self.domain(), region),
            (LabelDomain::Both, _)
                | (LabelDomain::PreambleOnly, Region::Preamble)
                | (LabelDomain::JudgmentOnly, Region::Judgment)
        )
    }

    /// Role labels that reconciliation may overwrite other labels with.
    pub fn is_role(self) -> bool {
        matches!(
            self,
            EntityLabel::Petitioner
                | EntityLabel::Respondent
                | EntityLabel::Judge
                | EntityLabel::Lawyer
                | EntityLabel::Witness
        )
    }

    /// Labels eligible to be overwritten by reconciliation.
    pub fn is_reconcilable(self) -> bool {
        matches!(self, EntityLabel::OtherPerson | EntityLabel::Org)
    }

    /// Wire name, e.g. `CASE_NUMBER`.
    pub fn as_str(self) -> &'static str {
        match self {
            EntityLabel::Court => "COURT",
            EntityLabel::Petitioner => "PETITIONER",
            EntityLabel::Respondent => "RESPONDENT",
            EntityLabel::Judge => "JUDGE",
            EntityLabel::Lawyer => "LAWYER",
            EntityLabel::Date => "DATE",
            EntityLabel::Org => "ORG",
            EntityLabel::Gpe => "GPE",
            EntityLabel::Statute => "STATUTE",
            EntityLabel::Provision => "PROVISION",
            EntityLabel::Precedent => "PRECEDENT",
            EntityLabel::CaseNumber => "CASE_NUMBER",
            EntityLabel::Witness => "WITNESS",
            EntityLabel::OtherPerson => "OTHER_PERSON",
        }
    }
}

impl fmt::Display for EntityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntityLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EntityLabel::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))
    }
}
