//! Split a judgment into preamble and body, then the body into sentences.
//!
//! ```bash
//! cargo run -p lexner --example segment_judgment
//! ```

use lexner::segment::{segment_sentences, split_preamble, LexiconVerbAnalyzer, Segmenter, SegmentConfig};

const WITH_MARKER: &str = "\
IN THE HIGH COURT OF DELHI AT NEW DELHI
CRL.A. 123/2020
Amit Kumar ...Appellant
Versus
State (NCT of Delhi) ...Respondent
J U D G M E N T
This appeal under Section 374 challenges the conviction. \
The trial court had convicted the appellant on 5 January 2019. \
Mr. Rao, learned counsel, argued that the evidence of P.W. 2 was unreliable.";

const WITHOUT_MARKER: &str = "\
IN THE SUPREME COURT OF INDIA
CIVIL APPEAL NO 4521 OF 2011
Leave granted in all the petitions. The common question is answered today.";

fn show(name: &str, text: &str) {
    let preamble_end = split_preamble(text);
    println!("== {name} ==");
    println!("preamble ends at char {preamble_end}");
    let preamble: String = text.chars().take(preamble_end).collect();
    if !preamble.is_empty() {
        println!("--- preamble ---\n{preamble}");
    }
    println!("--- sentences ---");
    for (i, (s, e)) in segment_sentences(text, (preamble_end, text.chars().count()))
        .into_iter()
        .enumerate()
    {
        let sentence: String = text.chars().skip(s).take(e - s).collect();
        println!("  [{i}] ({s}, {e}) {sentence}");
    }
    println!();
}

fn main() {
    show("marker line ends the preamble", WITH_MARKER);
    show("no marker: two consecutive verb-bearing sentences", WITHOUT_MARKER);

    // The verb analyzer is pluggable; a closure works.
    let segmenter = Segmenter::new(&SegmentConfig::default());
    let everything_is_a_verb = |_: &str| true;
    println!(
        "with an always-true analyzer the second text splits at {} (vs {} with the lexicon)",
        segmenter.split_preamble(WITHOUT_MARKER, &everything_is_a_verb),
        segmenter.split_preamble(WITHOUT_MARKER, &LexiconVerbAnalyzer),
    );
}
