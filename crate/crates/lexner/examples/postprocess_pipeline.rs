//! Run the whole pipeline over a full judgment with predicted spans:
//! segmentation, reconciliation, precedent and statute coreference,
//! provision linking.
//!
//! ```bash
//! cargo run -p lexner --example postprocess_pipeline
//! ```

use lexner::corpus::AnnotationRecord;
use lexner::doc::DocType;
use lexner::label::EntityLabel;
use lexner::pipeline::postprocess_record;
use lexner::PipelineConfig;

const JUDGMENT: &str = "\
IN THE HIGH COURT OF DELHI
Amit Kumar ...Petitioner
Versus
State of Delhi ...Respondent
JUDGMENT
The petitioner Amit Kumar was charged under Section 420 of Indian Penal Code. \
The constitution bench in Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565 dealt with anticipatory bail. \
Counsel placed reliance on Sibbia's case (supra) at every stage. \
The section 420 says dishonest inducement is punishable.";

fn main() {
    let find = |pat: &str, nth: usize| {
        let byte = JUDGMENT.match_indices(pat).nth(nth).unwrap().0;
        let start = JUDGMENT[..byte].chars().count();
        (start, start + pat.chars().count())
    };
    let spans = vec![
        { let r = find("Amit Kumar", 0); (r.0, r.1, EntityLabel::Petitioner) },
        { let r = find("State of Delhi", 0); (r.0, r.1, EntityLabel::Respondent) },
        { let r = find("Amit Kumar", 1); (r.0, r.1, EntityLabel::OtherPerson) },
        { let r = find("Section 420", 0); (r.0, r.1, EntityLabel::Provision) },
        { let r = find("Indian Penal Code", 0); (r.0, r.1, EntityLabel::Statute) },
        {
            let r = find("Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565", 0);
            (r.0, r.1, EntityLabel::Precedent)
        },
        { let r = find("Sibbia", 1); (r.0, r.1, EntityLabel::OtherPerson) },
        { let r = find("section 420", 0); (r.0, r.1, EntityLabel::Provision) },
    ];

    let record =
        AnnotationRecord::new("hc-2020-123", DocType::FullJudgment, JUDGMENT).with_spans(spans);
    let output = postprocess_record(&record, &PipelineConfig::default()).unwrap();
    println!("{}", serde_json::to_string_pretty(&output).unwrap());
}
