//! Shared generators and independent oracles for the integration suites.
//!
//! Everything here is test-only and deliberately independent of the library
//! implementation paths it checks: the matcher oracle enumerates assignments
//! exhaustively, and the synthetic corpora are built directly from the
//! reference count tables.

#![allow(dead_code)]

use lexner::corpus::{reference, AnnotationRecord, Split};
use lexner::doc::DocType;
use lexner::eval::MatchScheme;
use lexner::label::EntityLabel;
use lexner::span::{EntitySpan, SpanId, SpanSource};
use lexner::JudgmentDoc;
use rand::rngs::StdRng;
use rand::Rng;

// ---------------------------------------------------------------------------
// Exhaustive optimal matcher (oracle)
// ---------------------------------------------------------------------------

fn admissible(g: &EntitySpan, p: &EntitySpan, scheme: MatchScheme) -> bool {
    if g.label != p.label {
        return false;
    }
    match scheme {
        MatchScheme::Strict => g.start == p.start && g.end == p.end,
        MatchScheme::TypeMatch => g.overlaps(p),
    }
}

/// Maximum one-to-one matching size over all assignments, by memoized
/// exhaustive search. Only usable for small units (≤ ~16 golds).
pub fn optimal_match_count(gold: &[EntitySpan], pred: &[EntitySpan], scheme: MatchScheme) -> usize {
    assert!(gold.len() <= 16, "oracle is exponential in gold count");
    let mut memo = vec![usize::MAX; (pred.len() + 1) << gold.len()];

    fn rec(
        pi: usize,
        used: usize,
        gold: &[EntitySpan],
        pred: &[EntitySpan],
        scheme: MatchScheme,
        memo: &mut [usize],
    ) -> usize {
        if pi == pred.len() {
            return 0;
        }
        let key = (pi << gold.len()) | used;
        if memo[key] != usize::MAX {
            return memo[key];
        }
        let mut best = rec(pi + 1, used, gold, pred, scheme, memo);
        for (gi, g) in gold.iter().enumerate() {
            if used & (1 << gi) == 0 && admissible(g, &pred[pi], scheme) {
                let with = 1 + rec(pi + 1, used | (1 << gi), gold, pred, scheme, memo);
                best = best.max(with);
            }
        }
        memo[key] = best;
        best
    }

    rec(0, 0, gold, pred, scheme, &mut memo)
}

/// True when every prediction overlaps at most one gold span.
pub fn single_overlap_instance(gold: &[EntitySpan], pred: &[EntitySpan]) -> bool {
    pred.iter()
        .all(|p| gold.iter().filter(|g| g.overlaps(p)).count() <= 1)
}

// ---------------------------------------------------------------------------
// Random evaluation instances
// ---------------------------------------------------------------------------

const EVAL_LABELS: [EntityLabel; 4] =
    [EntityLabel::Court, EntityLabel::Date, EntityLabel::Org, EntityLabel::Precedent];

fn make_spans(triples: &[(usize, usize, EntityLabel)], source: SpanSource) -> Vec<EntitySpan> {
    triples
        .iter()
        .enumerate()
        .map(|(i, &(s, e, l))| EntitySpan::new(SpanId(i as u32), s, e, l, source))
        .collect()
}

fn random_flat(rng: &mut StdRng, max_spans: usize, len: usize) -> Vec<(usize, usize, EntityLabel)> {
    let mut out = Vec::new();
    let mut pos = rng.random_range(0..4);
    while out.len() < max_spans && pos + 2 < len {
        let start = pos;
        let width = rng.random_range(2..10).min(len - start - 1);
        let end = start + width.max(1);
        out.push((start, end, EVAL_LABELS[rng.random_range(0..EVAL_LABELS.len())]));
        pos = end + rng.random_range(1..5);
    }
    out
}

/// One (gold, pred) evaluation unit with at most 10 flat spans per side.
/// Predictions mix exact copies, boundary shifts, relabelings, merges of two
/// adjacent golds, spurious spans and misses.
pub fn gen_eval_instance(rng: &mut StdRng) -> (Vec<EntitySpan>, Vec<EntitySpan>) {
    let len = 120;
    let gold_count = rng.random_range(0..=10);
    let gold_triples = random_flat(rng, gold_count, len);

    let pred_triples: Vec<(usize, usize, EntityLabel)> = if rng.random_bool(0.3) {
        let pred_count = rng.random_range(0..=10);
        random_flat(rng, pred_count, len)
    } else {
        let mut derived = Vec::new();
        let mut prev_end = 0usize;
        let mut i = 0;
        while i < gold_triples.len() {
            let (s, e, l) = gold_triples[i];
            let choice = rng.random_range(0..10);
            match choice {
                0..=3 => derived.push((s, e, l)), // exact
                4 => {
                    // shift the start right, keeping at least one char
                    let ns = (s + 1).min(e - 1);
                    derived.push((ns, e, l));
                }
                5 => {
                    // shrink the end
                    let ne = if e - s > 1 { e - 1 } else { e };
                    derived.push((s, ne, l));
                }
                6 => derived.push((s, e, EVAL_LABELS[rng.random_range(0..EVAL_LABELS.len())])),
                7 => {
                    // merge with the following gold when there is one
                    if i + 1 < gold_triples.len() {
                        let (_, e2, _) = gold_triples[i + 1];
                        derived.push((s, e2, l));
                        i += 1;
                    } else {
                        derived.push((s, e, l));
                    }
                }
                8 => {} // miss
                _ => {
                    // spurious span in the gap before this gold
                    if s > prev_end + 2 {
                        let sp = prev_end + 1;
                        derived.push((
                            sp,
                            (sp + rng.random_range(1..3)).min(s),
                            EVAL_LABELS[rng.random_range(0..EVAL_LABELS.len())],
                        ));
                    }
                    derived.push((s, e, l));
                }
            }
            prev_end = derived.last().map(|&(_, e, _)| e).unwrap_or(prev_end);
            i += 1;
        }
        derived.truncate(10);
        derived
    };

    (
        make_spans(&gold_triples, SpanSource::Gold),
        make_spans(&pred_triples, SpanSource::Predicted),
    )
}

// ---------------------------------------------------------------------------
// Random judgment documents
// ---------------------------------------------------------------------------

const NAMES: [&str; 8] = [
    "Amit Kumar",
    "Rajesh Sharma",
    "Sunita Devi",
    "Mohan Lal",
    "Asha Rani",
    "Vijay Menon",
    "Mañjunath Gowda",
    "Kiran Patel",
];
const COURTS: [&str; 3] =
    ["High Court of Delhi", "Supreme Court of India", "Bombay High Court"];
const ORGS: [&str; 3] = ["State Bank of India", "Bank of China", "Tata Motors"];
const GPES: [&str; 4] = ["Delhi", "Punjab", "Mumbai", "Chennai"];
const STATUTES: [&str; 4] =
    ["Indian Penal Code", "Companies Act, 1956", "Motor Vehicles Act", "Limitation Act"];

/// Incremental builder that tracks character offsets while writing text.
struct DocBuilder {
    text: String,
    chars: usize,
    spans: Vec<(usize, usize, EntityLabel)>,
    sentences: Vec<(usize, usize)>,
}

impl DocBuilder {
    fn new() -> Self {
        DocBuilder { text: String::new(), chars: 0, spans: Vec::new(), sentences: Vec::new() }
    }

    fn push(&mut self, s: &str) {
        self.text.push_str(s);
        self.chars += s.chars().count();
    }

    fn push_entity(&mut self, s: &str, label: EntityLabel) {
        let start = self.chars;
        self.push(s);
        self.spans.push((start, self.chars, label));
    }

    fn sentence(&mut self, f: impl FnOnce(&mut Self)) {
        let start = self.chars;
        f(self);
        self.sentences.push((start, self.chars));
        self.push(" ");
    }
}

/// A synthetic judgment with a marker-terminated preamble and a body built
/// from entity-bearing sentence templates. Returns the document (with known
/// segmentation) and the same content as a FULL_JUDGMENT record.
pub fn gen_judgment(rng: &mut StdRng, id: &str) -> (JudgmentDoc, AnnotationRecord) {
    let mut b = DocBuilder::new();

    // Preamble.
    let petitioner = NAMES[rng.random_range(0..NAMES.len())];
    let respondent = NAMES[rng.random_range(0..NAMES.len())];
    b.push("IN THE ");
    b.push_entity(COURTS[rng.random_range(0..COURTS.len())], EntityLabel::Court);
    b.push("\n");
    b.push_entity(petitioner, EntityLabel::Petitioner);
    b.push(" ...Petitioner\nVersus\n");
    if respondent != petitioner {
        b.push_entity(respondent, EntityLabel::Respondent);
    } else {
        b.push("The State");
    }
    b.push(" ...Respondent\nJUDGMENT\n");
    let preamble_end = b.chars;

    // Body sentences.
    let mut cited: Vec<(String, String)> = Vec::new(); // (party1, full string)
    let n_sentences = rng.random_range(4..12);
    for _ in 0..n_sentences {
        match rng.random_range(0..10) {
            0 => b.sentence(|b| {
                b.push("The witness ");
                b.push_entity(NAMES[rng.random_range(0..NAMES.len())], EntityLabel::Witness);
                b.push(" deposed before the court.");
            }),
            1 => b.sentence(|b| {
                b.push("Later ");
                // Reuse a preamble name half the time so reconciliation and
                // its oracle have material to work with.
                let name = if rng.random_bool(0.5) {
                    petitioner
                } else {
                    NAMES[rng.random_range(0..NAMES.len())]
                };
                b.push_entity(name, EntityLabel::OtherPerson);
                b.push(" was seen near the scene.");
            }),
            2 => {
                let p1 = NAMES[rng.random_range(0..NAMES.len())];
                let p2 = GPES[rng.random_range(0..GPES.len())];
                let year = rng.random_range(1960..2020);
                let vol = rng.random_range(1..9);
                let page = rng.random_range(1..999);
                let full = format!("{p1} Vs State of {p2} ({year}) {vol} SCC {page}");
                cited.push((p1.to_string(), full.clone()));
                b.sentence(|b| {
                    b.push("The bench in ");
                    b.push_entity(&full, EntityLabel::Precedent);
                    b.push(" dealt with this issue.");
                });
            }
            3 => {
                // Referent to an earlier precedent, when one exists.
                if let Some((p1, _)) = cited.last().cloned() {
                    let surname = p1.split_whitespace().last().unwrap().to_string();
                    b.sentence(move |b| {
                        b.push("Counsel relied on ");
                        b.push_entity(&surname, EntityLabel::OtherPerson);
                        b.push("'s case (supra) again.");
                    });
                } else {
                    b.sentence(|b| b.push("The matter was adjourned for two weeks."));
                }
            }
            4 => {
                let n = rng.random_range(2..500);
                let statute = STATUTES[rng.random_range(0..STATUTES.len())];
                b.sentence(|b| {
                    b.push_entity(&format!("Section {n}"), EntityLabel::Provision);
                    b.push(" of ");
                    b.push_entity(statute, EntityLabel::Statute);
                    b.push(" was invoked by the counsel.");
                });
            }
            5 => {
                let n = rng.random_range(2..500);
                b.sentence(|b| {
                    b.push("The ");
                    b.push_entity(&format!("section {n}"), EntityLabel::Provision);
                    b.push(" says the act is punishable.");
                });
            }
            6 => b.sentence(|b| {
                b.push("The ");
                b.push_entity(ORGS[rng.random_range(0..ORGS.len())], EntityLabel::Org);
                b.push(" operates in ");
                b.push_entity(GPES[rng.random_range(0..GPES.len())], EntityLabel::Gpe);
                b.push(" since long.");
            }),
            7 => {
                let d = rng.random_range(1..29);
                let y = rng.random_range(1970..2022);
                b.sentence(|b| {
                    b.push("The incident happened on ");
                    b.push_entity(&format!("{d} January {y}"), EntityLabel::Date);
                    b.push(" in the morning.");
                });
            }
            8 => {
                let statute = STATUTES[rng.random_range(0..STATUTES.len())];
                b.sentence(|b| {
                    b.push("The ");
                    b.push_entity(statute, EntityLabel::Statute);
                    b.push(" (for brevity, 'the Act') governs the dispute.");
                });
            }
            _ => b.sentence(|b| b.push("The matter was adjourned for two weeks.")),
        }
    }

    let doc = JudgmentDoc::new(id, b.text.clone())
        .with_preamble_end(preamble_end)
        .with_sentences(b.sentences.clone())
        .with_spans(&b.spans, SpanSource::Predicted);
    let record = AnnotationRecord::new(id, DocType::FullJudgment, b.text).with_spans(b.spans);
    (doc, record)
}

// ---------------------------------------------------------------------------
// Synthetic corpora matching the published reference counts
// ---------------------------------------------------------------------------

fn spread_records(
    id_prefix: &str,
    unit: DocType,
    split: Split,
    record_count: usize,
    labels: &[(EntityLabel, usize)],
) -> Vec<AnnotationRecord> {
    // Round-robin the label multiset across the records, then lay each
    // record's spans out left to right.
    let mut assigned: Vec<Vec<EntityLabel>> = vec![Vec::new(); record_count];
    let mut slot = 0usize;
    for &(label, count) in labels {
        for _ in 0..count {
            assigned[slot % record_count].push(label);
            slot += 1;
        }
    }
    assigned
        .into_iter()
        .enumerate()
        .map(|(i, labels)| {
            let mut text = String::new();
            let mut spans = Vec::new();
            let mut pos = 0usize;
            for label in labels {
                let token = "entity";
                text.push_str(token);
                spans.push((pos, pos + token.len(), label));
                pos += token.len();
                text.push(' ');
                pos += 1;
            }
            text.push_str("tail text");
            AnnotationRecord::new(format!("{id_prefix}-{i:05}"), unit, text)
                .with_spans(spans)
                .with_split(split)
        })
        .collect()
}

/// Train/dev corpus with exactly the published aggregate and (for train)
/// per-label counts.
pub fn synthetic_split(split: Split) -> Vec<AnnotationRecord> {
    match split {
        Split::Train => {
            let preamble_labels: Vec<(EntityLabel, usize)> = reference::TRAIN_LABEL_COUNTS
                .iter()
                .filter_map(|&(l, _, p)| p.map(|n| (l, n)))
                .collect();
            let judgment_labels: Vec<(EntityLabel, usize)> = reference::TRAIN_LABEL_COUNTS
                .iter()
                .filter_map(|&(l, j, _)| j.map(|n| (l, n)))
                .collect();
            let mut records = spread_records(
                "train-p",
                DocType::Preamble,
                Split::Train,
                reference::TRAIN.preambles,
                &preamble_labels,
            );
            records.extend(spread_records(
                "train-s",
                DocType::JudgmentSentence,
                Split::Train,
                reference::TRAIN.judgment_sentences,
                &judgment_labels,
            ));
            records
        }
        Split::Dev => {
            // Only the aggregates are published for dev: put two entities in
            // each preamble and spread the rest over the sentences.
            let preamble_spans = 2 * reference::DEV.preambles;
            let mut records = spread_records(
                "dev-p",
                DocType::Preamble,
                Split::Dev,
                reference::DEV.preambles,
                &[
                    (EntityLabel::Court, reference::DEV.preambles),
                    (EntityLabel::Petitioner, reference::DEV.preambles),
                ],
            );
            records.extend(spread_records(
                "dev-s",
                DocType::JudgmentSentence,
                Split::Dev,
                reference::DEV.judgment_sentences,
                &[
                    (EntityLabel::Statute, 1000),
                    (EntityLabel::Provision, 1000),
                    (EntityLabel::Date, reference::DEV.entities - preamble_spans - 2000),
                ],
            ));
            records
        }
        Split::Test => synthetic_test_gold(),
    }
}

/// Test-split gold whose per-label counts and average character lengths
/// reproduce the published profile exactly (every span of a label has
/// exactly the profile length).
pub fn synthetic_test_gold() -> Vec<AnnotationRecord> {
    let mut preambles: Vec<Vec<(EntityLabel, usize)>> =
        vec![Vec::new(); reference::TEST.preambles];
    let mut sentences: Vec<Vec<(EntityLabel, usize)>> =
        vec![Vec::new(); reference::TEST.judgment_sentences];
    let (p_len, s_len) = (preambles.len(), sentences.len());
    let mut p_slot = 0usize;
    let mut s_slot = 0usize;
    for &(label, count, avg_len) in &reference::TEST_LABEL_PROFILE {
        for _ in 0..count {
            // LAWYER is annotated in preambles only; everything else goes to
            // judgment sentences.
            if label == EntityLabel::Lawyer {
                preambles[p_slot % p_len].push((label, avg_len));
                p_slot += 1;
            } else {
                sentences[s_slot % s_len].push((label, avg_len));
                s_slot += 1;
            }
        }
    }

    let build = |id_prefix: &str, unit: DocType, sets: Vec<Vec<(EntityLabel, usize)>>| {
        sets.into_iter()
            .enumerate()
            .map(|(i, labels)| {
                let mut text = String::new();
                let mut spans = Vec::new();
                let mut pos = 0usize;
                for (label, len) in labels {
                    let token = "a".repeat(len);
                    text.push_str(&token);
                    spans.push((pos, pos + len, label));
                    pos += len + 1;
                    text.push(' ');
                }
                text.push_str("end");
                AnnotationRecord::new(format!("{id_prefix}-{i:05}"), unit, text)
                    .with_spans(spans)
                    .with_split(Split::Test)
            })
            .collect::<Vec<_>>()
    };

    let mut records = build("test-p", DocType::Preamble, preambles);
    records.extend(build("test-s", DocType::JudgmentSentence, sentences));
    records
}

/// Deterministic perturbation of a gold corpus into a prediction file:
/// shifted starts, dropped spans, occasional relabelings.
pub fn perturbed_predictions(gold: &[AnnotationRecord]) -> Vec<AnnotationRecord> {
    let mut counter = 0usize;
    gold.iter()
        .map(|rec| {
            let mut out = rec.clone();
            out.spans = rec
                .spans
                .iter()
                .filter_map(|&(s, e, l)| {
                    counter += 1;
                    match counter % 7 {
                        0 => None,                       // miss
                        1 if e - s > 1 => Some((s + 1, e, l)), // boundary error
                        2 => Some((s, e, EntityLabel::Org)),   // type error
                        _ => Some((s, e, l)),
                    }
                })
                .collect();
            out
        })
        .collect()
}
