//! Thin command-line front end over the library. Every subcommand reads
//! JSON/JSONL (or plain text for `segment`/`classify`), writes
//! machine-readable results to stdout or `--out`, and keeps human chatter on
//! stderr.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lexner::corpus::{
    self, classify_case_type, compute_stats, export_corpus, import_corpus_str, reference,
    select_sentences, AnnotationRecord, FormatMapping, Split,
};
use lexner::eval::{per_entity_table, score_units, EvalReport, MatchScheme};
use lexner::pipeline::postprocess_all;
use lexner::segment::{LexiconVerbAnalyzer, Segmenter};
use lexner::span::{EntitySpan, SpanSource};
use lexner::PipelineConfig;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "lexner",
    version,
    about = "Post-processing, evaluation and corpus tools for legal NER over Indian court judgments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Pipeline configuration JSON (thresholds, keyword tables, acronyms).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Split plain judgment text into preamble and sentences.
    Segment {
        /// Input text file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Document id to report.
        #[arg(long, default_value = "doc")]
        doc_id: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Read an annotation file (optionally via a field mapping) and emit
    /// canonical JSONL.
    Import {
        input: String,
        /// JSON file mapping foreign field names onto id/text/spans.
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Force the split instead of inferring it.
        #[arg(long)]
        split: Option<Split>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Corpus statistics, with deltas against the published reference counts.
    Stats {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Compare one split against its reference counts.
        #[arg(long)]
        expect: Option<Split>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Classify judgment text into a case type by key act names.
    Classify {
        /// Input text file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Classify this literal text instead of reading input.
        #[arg(long)]
        text: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Select entity-rich units for annotation from predicted spans.
    Select {
        input: String,
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Target selected entities per label.
        #[arg(long)]
        quota: Option<usize>,
        /// Fraction of zero-entity sentences to append.
        #[arg(long)]
        zero_fraction: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run segmentation, reconciliation, coreference and provision linking
    /// over full judgments.
    Postprocess {
        input: String,
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Score predictions against gold annotations.
    Evaluate {
        #[arg(long)]
        gold: PathBuf,
        #[arg(long)]
        pred: PathBuf,
        #[arg(long, value_enum, default_value_t = SchemeArg::Both)]
        scheme: SchemeArg,
        /// Print the entity-wise text table instead of JSON.
        #[arg(long)]
        table: bool,
        /// Score only these units; default is preambles and judgment
        /// sentences combined.
        #[arg(long, value_enum, default_value_t = UnitArg::All)]
        unit: UnitArg,
        #[arg(long)]
        mapping: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitArg {
    All,
    Preamble,
    Sentence,
}

impl UnitArg {
    fn keeps(self, unit: lexner::doc::DocType) -> bool {
        match self {
            UnitArg::All => true,
            UnitArg::Preamble => unit == lexner::doc::DocType::Preamble,
            UnitArg::Sentence => unit == lexner::doc::DocType::JudgmentSentence,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Strict,
    Typematch,
    Both,
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

fn write_output(common: &CommonArgs, content: &str) -> Result<()> {
    match &common.out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_config(common: &CommonArgs) -> Result<PipelineConfig> {
    match &common.config {
        Some(path) => PipelineConfig::load(path)
            .with_context(|| format!("loading config {}", path.display())),
        None => Ok(PipelineConfig::default()),
    }
}

fn load_mapping(path: &Option<PathBuf>) -> Result<FormatMapping> {
    match path {
        Some(p) => {
            let content =
                std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            serde_json::from_str(&content).context("parsing format mapping")
        }
        None => Ok(FormatMapping::canonical()),
    }
}

fn import_from(input: &str, mapping: &FormatMapping, split: Option<Split>) -> Result<corpus::ImportReport> {
    let hint = split.or_else(|| {
        let lower = Path::new(input)
            .file_name()
            .and_then(|n| n.to_str())
            .map(str::to_lowercase)?;
        ["train", "dev", "test"]
            .iter()
            .find(|s| lower.contains(*s))
            .and_then(|s| s.parse().ok())
    });
    let content = read_input(input)?;
    let report = import_corpus_str(&content, mapping, hint)?;
    for w in &report.warnings {
        eprintln!("warning: record {} ({}): {}", w.record_index, w.doc_id, w.message);
    }
    Ok(report)
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Segment { input, doc_id, common } => {
            let cfg = load_config(&common)?;
            let text = read_input(&input)?;
            let segmenter = Segmenter::new(&cfg.segment);
            let preamble_end = segmenter.split_preamble(&text, &LexiconVerbAnalyzer);
            let sentences =
                segmenter.segment_sentences(&text, (preamble_end, text.chars().count()));
            let result = serde_json::json!({
                "doc_id": doc_id,
                "preamble_end": preamble_end,
                "sentences": sentences,
            });
            write_output(&common, &format!("{result}\n"))
        }
        Command::Import { input, mapping, split, common } => {
            let mapping = load_mapping(&mapping)?;
            let report = import_from(&input, &mapping, split)?;
            eprintln!("imported {} records", report.records.len());
            write_output(&common, &export_corpus(&report.records))
        }
        Command::Stats { inputs, mapping, expect, common } => {
            let mapping = load_mapping(&mapping)?;
            let mut records = Vec::new();
            for input in &inputs {
                records.extend(import_from(input, &mapping, None)?.records);
            }
            let stats = compute_stats(&records);
            let mut result = serde_json::json!({ "stats": stats });
            if let Some(split) = expect {
                let split_stats = stats
                    .splits
                    .get(&split.to_string())
                    .unwrap_or(&stats.total);
                let deltas = reference::nonzero_deltas(split_stats, split);
                result["expected_split"] = serde_json::json!(split.to_string());
                result["matches_reference"] = serde_json::json!(deltas.is_empty());
                result["deltas"] = serde_json::json!(deltas);
            }
            write_output(&common, &format!("{result}\n"))
        }
        Command::Classify { input, text, common } => {
            let text = match text {
                Some(t) => t,
                None => read_input(&input)?,
            };
            let classification = classify_case_type(&text);
            write_output(&common, &format!("{}\n", serde_json::to_string(&classification)?))
        }
        Command::Select { input, mapping, quota, zero_fraction, seed, common } => {
            let cfg = load_config(&common)?;
            let mapping = load_mapping(&mapping)?;
            let units = import_from(&input, &mapping, None)?.records;
            let mut select_cfg = cfg.select.clone();
            if let Some(q) = quota {
                select_cfg.per_label_quota = q;
            }
            if let Some(f) = zero_fraction {
                select_cfg.zero_entity_fraction = f;
            }
            if let Some(s) = seed {
                select_cfg.seed = s;
            }
            let outcome = select_sentences(&units, &select_cfg);
            eprintln!(
                "selected {} of {} units (dropped: {} short, {} non-english, {} side-by-side, {} duplicate)",
                outcome.selected.len(),
                units.len(),
                outcome.dropped_short,
                outcome.dropped_non_english,
                outcome.dropped_side_by_side,
                outcome.dropped_duplicate
            );
            write_output(&common, &export_corpus(&outcome.selected))
        }
        Command::Postprocess { input, mapping, threads, common } => {
            let cfg = load_config(&common)?;
            let mapping = load_mapping(&mapping)?;
            let records = import_from(&input, &mapping, None)?.records;
            let outputs = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .context("building thread pool")?
                    .install(|| postprocess_all(&records, &cfg)),
                None => postprocess_all(&records, &cfg),
            }?;
            let mut out = String::new();
            for output in &outputs {
                out.push_str(&serde_json::to_string(output)?);
                out.push('\n');
            }
            write_output(&common, &out)
        }
        Command::Evaluate { gold, pred, scheme, table, unit, mapping, common } => {
            let mapping = load_mapping(&mapping)?;
            let mut gold_records =
                import_from(gold.to_str().context("gold path")?, &mapping, None)?.records;
            let mut pred_records =
                import_from(pred.to_str().context("pred path")?, &mapping, None)?.records;
            gold_records.retain(|r| unit.keeps(r.unit()));
            pred_records.retain(|r| unit.keeps(r.unit()));
            let units = pair_units(&gold_records, &pred_records);
            let slices: Vec<(&[EntitySpan], &[EntitySpan])> = units
                .iter()
                .map(|(g, p)| (g.as_slice(), p.as_slice()))
                .collect();

            let run = |scheme: MatchScheme| -> Result<EvalReport> {
                Ok(score_units(slices.iter().copied(), scheme)?)
            };
            let (strict, type_match) = match scheme {
                SchemeArg::Strict => (Some(run(MatchScheme::Strict)?), None),
                SchemeArg::Typematch => (None, Some(run(MatchScheme::TypeMatch)?)),
                SchemeArg::Both => {
                    (Some(run(MatchScheme::Strict)?), Some(run(MatchScheme::TypeMatch)?))
                }
            };

            if table {
                let (Some(s), Some(t)) = (&strict, &type_match) else {
                    bail!("--table needs --scheme both");
                };
                return write_output(&common, &per_entity_table(s, t));
            }
            let mut result = serde_json::Map::new();
            if let Some(s) = &strict {
                result.insert("strict".into(), serde_json::to_value(s)?);
            }
            if let Some(t) = &type_match {
                result.insert("type_match".into(), serde_json::to_value(t)?);
            }
            if let (Some(s), Some(t)) = (&strict, &type_match) {
                result.insert("table".into(), serde_json::json!(per_entity_table(s, t)));
            }
            write_output(&common, &format!("{}\n", serde_json::Value::Object(result)))
        }
    }
}

/// Pair gold and prediction records by document id; a missing side scores as
/// an empty span list.
fn pair_units(
    gold: &[AnnotationRecord],
    pred: &[AnnotationRecord],
) -> Vec<(Vec<EntitySpan>, Vec<EntitySpan>)> {
    let mut by_id: BTreeMap<&str, (Vec<EntitySpan>, Vec<EntitySpan>)> = BTreeMap::new();
    for rec in gold {
        by_id.entry(&rec.doc_id).or_default().0 = rec.entity_spans(SpanSource::Gold);
    }
    for rec in pred {
        by_id.entry(&rec.doc_id).or_default().1 = rec.entity_spans(SpanSource::Predicted);
    }
    by_id.into_values().collect()
}
