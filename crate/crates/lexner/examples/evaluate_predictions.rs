//! Score predictions under the strict and type-match schemes and print the
//! entity-wise table.
//!
//! ```bash
//! cargo run -p lexner --example evaluate_predictions
//! ```

use lexner::eval::{per_entity_table, score_units, MatchScheme};
use lexner::label::EntityLabel;
use lexner::span::{EntitySpan, SpanId, SpanSource};

fn spans(triples: &[(usize, usize, EntityLabel)], source: SpanSource) -> Vec<EntitySpan> {
    triples
        .iter()
        .enumerate()
        .map(|(i, &(s, e, l))| EntitySpan::new(SpanId(i as u32), s, e, l, source))
        .collect()
}

fn main() {
    use EntityLabel::*;

    // Unit 1: the model drops the "Mr " prefix of a precedent, which is
    // wrong under strict and right under type match.
    let gold_1 = spans(&[(0, 38, Precedent), (50, 61, Provision)], SpanSource::Gold);
    let pred_1 = spans(&[(3, 38, Precedent), (50, 61, Provision)], SpanSource::Predicted);

    // Unit 2: one exact hit, one spurious date, one missed court.
    let gold_2 = spans(&[(0, 12, Court), (20, 31, Date)], SpanSource::Gold);
    let pred_2 = spans(&[(20, 31, Date), (40, 44, Date)], SpanSource::Predicted);

    let units = [
        (gold_1.as_slice(), pred_1.as_slice()),
        (gold_2.as_slice(), pred_2.as_slice()),
    ];

    let strict = score_units(units.iter().copied(), MatchScheme::Strict).unwrap();
    let type_match = score_units(units.iter().copied(), MatchScheme::TypeMatch).unwrap();

    println!("{}", per_entity_table(&strict, &type_match));
    println!(
        "overall strict     P {:.3} R {:.3} F1 {:.3}",
        strict.overall.precision, strict.overall.recall, strict.overall.f1
    );
    println!(
        "overall type-match P {:.3} R {:.3} F1 {:.3}",
        type_match.overall.precision, type_match.overall.recall, type_match.overall.f1
    );
    println!("\nmachine-readable strict report:");
    println!("{}", serde_json::to_string_pretty(&strict).unwrap());
}
