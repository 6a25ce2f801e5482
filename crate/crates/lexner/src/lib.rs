//! Document-level post-processing, evaluation and corpus tooling for named
//! entities in Indian court judgments.
//!
//! Judgment text is annotated with 14 legal entity types (COURT, PETITIONER,
//! STATUTE, PROVISION, PRECEDENT, ...) as flat character-offset spans. NER
//! models trained on isolated sentences miss document-level context; this
//! crate adds it back and measures the results:
//!
//! - [`segment`]: split a judgment into preamble and body, and the body
//!   into sentences.
//! - [`reconcile`]: overwrite OTHER_PERSON/ORG labels that exactly match a
//!   party/judge/lawyer/witness entity elsewhere in the document.
//! - [`coref`]: cluster precedent mentions (party names, citations,
//!   "supra" referents) and statute mentions (brevity aliases, acronyms).
//! - [`provision`]: assign a governing statute to every provision.
//! - [`eval`]: strict and type-match precision/recall/F1, per label and
//!   overall.
//! - [`corpus`]: canonical JSONL annotation format, corpus statistics with
//!   reference deltas, case-type classification and annotation-batch
//!   selection.
//!
//! Every capability has a runnable example under `examples/`; the `lexner`
//! binary exposes the same operations as subcommands.

pub mod config;
pub mod coref;
pub mod corpus;
pub mod doc;
mod error;
pub mod eval;
pub mod label;
pub mod pipeline;
pub mod provision;
pub mod reconcile;
pub mod segment;
pub mod span;
pub mod textnorm;
pub mod verbs;

pub use config::PipelineConfig;
pub use doc::{CharMap, DocMeta, DocType, JudgmentDoc, Severity, Violation, ViolationKind};
pub use error::{Error, Result};
pub use label::{EntityLabel, LabelDomain, Region};
pub use span::{EntitySpan, SpanId, SpanSource};

/// Check every type invariant of a document; violations are data.
pub fn validate_doc(doc: &JudgmentDoc) -> Vec<Violation> {
    doc.validate()
}
