//! Classify judgments into case types by key act names.
//!
//! ```bash
//! cargo run -p lexner --example classify_case_types
//! ```

use lexner::corpus::classify_case_type;

fn main() {
    let samples = [
        "The assessment under the Income Tax Act 1961 was reopened by the officer.",
        "The accused was charged under the penal code after the motor vehicles act claim.",
        "A suit under Order 7 of the Code of Civil Procedure read with the family courts framework.",
        "Compensation was claimed under the MV Act for the accident.",
        "The notification under the Land Acquisition Act was challenged.",
        "Winding up was sought under the Companies Act before the tribunal.",
        "Article 21 of the Constitution guarantees the right claimed.",
        "Proceedings under the SARFAESI Act were initiated by the bank.",
        "An appeal about limitation, with no act names at all.",
    ];

    for text in samples {
        let c = classify_case_type(text);
        let keywords: Vec<&str> = c.matched_keywords.iter().map(|h| h.keyword.as_str()).collect();
        println!("{:<20} {:?}  <- {}", c.case_type.to_string(), keywords, text);
    }
}
