//! Preamble/judgment splitting and sentence segmentation.
//!
//! A judgment splits into a formatted preamble and the free-text judgment
//! body. The preamble typically ends with a marker line like JUDGMENT or
//! ORDER; when no marker is present, the judgment is taken to start at the
//! first of two consecutive sentences that each contain a verb, since
//! preambles are formatted metadata rather than grammatical sentences.

use crate::verbs;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Segmentation settings. All offsets produced are character offsets.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SegmentConfig {
    /// Keywords that, alone on a line (ignoring punctuation and inter-letter
    /// spacing common in scanned judgments), end the preamble.
    pub marker_keywords: Vec<String>,
    /// Abbreviations whose trailing period never ends a sentence.
    pub abbreviations: Vec<String>,
}

impl Default for SegmentConfig {
    fn default() -> Self {
        SegmentConfig {
            marker_keywords: ["JUDGMENT", "JUDGEMENT", "ORDER", "J U D G M E N T", "O R D E R"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            abbreviations: [
                "No.", "Nos.", "v.", "vs.", "Vs.", "Mr.", "Mrs.", "Ms.", "Dr.", "M/s.",
                "Smt.", "Sh.", "Hon'ble", "Sec.", "Art.", "Ors.", "Anr.",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        }
    }
}

/// Verb detection over one sentence. The bundled [`LexiconVerbAnalyzer`] is
/// the default; substitute a real POS tagger by implementing this trait
/// (closures work too).
pub trait VerbAnalyzer {
    fn has_verb(&self, sentence: &str) -> bool;
}

impl<F: Fn(&str) -> bool> VerbAnalyzer for F {
    fn has_verb(&self, sentence: &str) -> bool {
        self(sentence)
    }
}

/// Closed-list verb detector backed by [`crate::verbs`].
#[derive(Debug, Clone, Copy, Default)]
pub struct LexiconVerbAnalyzer;

impl VerbAnalyzer for LexiconVerbAnalyzer {
    fn has_verb(&self, sentence: &str) -> bool {
        sentence
            .split(|c: char| !c.is_alphabetic())
            .filter(|t| !t.is_empty())
            .any(|t| verbs::is_verb_token(&t.to_lowercase()))
    }
}

/// One scanned unit of the preamble-detection pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceAnalysis {
    pub range: (usize, usize),
    pub has_verb: bool,
}

/// Reusable segmenter with precompiled keyword and abbreviation tables.
#[derive(Debug, Clone)]
pub struct Segmenter {
    marker_norms: HashSet<String>,
    abbrev_norms: HashSet<String>,
}

impl Default for Segmenter {
    fn default() -> Self {
        Segmenter::new(&SegmentConfig::default())
    }
}

const CLOSERS: [char; 6] = ['"', '\'', ')', ']', '\u{201d}', '\u{2019}'];

impl Segmenter {
    pub fn new(config: &SegmentConfig) -> Self {
        let marker_norms = config
            .marker_keywords
            .iter()
            .map(|k| normalize_marker(k))
            .filter(|k| !k.is_empty())
            .collect();
        let abbrev_norms = config
            .abbreviations
            .iter()
            .filter(|a| a.ends_with('.'))
            .map(|a| a.trim_end_matches('.').to_lowercase())
            .collect();
        Segmenter { marker_norms, abbrev_norms }
    }

    /// Offset where the judgment region begins; 0 means the whole text is
    /// judgment. Marker rule first, then the two-consecutive-verb-sentences
    /// fallback (returning the start of the first of the two).
    pub fn split_preamble(&self, text: &str, analyzer: &dyn VerbAnalyzer) -> usize {
        if text.is_empty() {
            return 0;
        }
        let chars: Vec<char> = text.chars().collect();
        if let Some(off) = self.find_marker(&chars) {
            return off;
        }
        let units = self.analyze_units_inner(&chars, analyzer);
        for pair in units.windows(2) {
            if pair[0].has_verb && pair[1].has_verb {
                return pair[0].range.0;
            }
        }
        0
    }

    /// The unit scan behind the fallback rule, exposed for inspection.
    /// Units break on sentence terminators and on line ends, because
    /// preamble lines rarely carry terminators at all.
    pub fn analyze_units(&self, text: &str, analyzer: &dyn VerbAnalyzer) -> Vec<SentenceAnalysis> {
        let chars: Vec<char> = text.chars().collect();
        self.analyze_units_inner(&chars, analyzer)
    }

    fn analyze_units_inner(
        &self,
        chars: &[char],
        analyzer: &dyn VerbAnalyzer,
    ) -> Vec<SentenceAnalysis> {
        self.scan(chars, true)
            .into_iter()
            .map(|(s, e)| {
                let unit: String = chars[s..e].iter().collect();
                SentenceAnalysis { range: (s, e), has_verb: analyzer.has_verb(&unit) }
            })
            .collect()
    }

    /// Ordered, non-overlapping sentence ranges covering every
    /// non-whitespace character of `region` (a char-offset range).
    pub fn segment_sentences(&self, text: &str, region: (usize, usize)) -> Vec<(usize, usize)> {
        let char_len = text.chars().count();
        let (start, end) = (region.0.min(char_len), region.1.min(char_len));
        if start >= end {
            return Vec::new();
        }
        let chars: Vec<char> = text.chars().skip(start).take(end - start).collect();
        self.scan(&chars, false)
            .into_iter()
            .map(|(s, e)| (s + start, e + start))
            .collect()
    }

    fn find_marker(&self, chars: &[char]) -> Option<usize> {
        let mut line_start = 0;
        let mut i = 0;
        while i <= chars.len() {
            let at_end = i == chars.len();
            if at_end || chars[i] == '\n' {
                let norm = normalize_marker_chars(&chars[line_start..i]);
                if !norm.is_empty() && self.marker_norms.contains(&norm) {
                    // Offset immediately after the marker line.
                    return Some(if at_end { i } else { i + 1 });
                }
                line_start = i + 1;
            }
            if at_end {
                break;
            }
            i += 1;
        }
        None
    }

    /// Core scanner. Emits trimmed unit ranges, splitting on `.`/`?`/`!`
    /// (with abbreviation and decimal guards) and, when `break_on_newline`
    /// is set, on line ends.
    fn scan(&self, chars: &[char], break_on_newline: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut sent_start: Option<usize> = None;
        let mut last_non_ws = 0;
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == '\n' && break_on_newline {
                if let Some(s) = sent_start.take() {
                    out.push((s, last_non_ws + 1));
                }
                i += 1;
                continue;
            }
            if !c.is_whitespace() {
                if sent_start.is_none() {
                    sent_start = Some(i);
                }
                last_non_ws = i;
            }
            if matches!(c, '.' | '?' | '!') && sent_start.is_some() {
                if c == '.' && self.is_abbreviation_at(chars, i) {
                    i += 1;
                    continue;
                }
                // Include any closing quotes/brackets, then require
                // whitespace or end of text; "5.5" never splits.
                let mut k = i + 1;
                while k < chars.len() && CLOSERS.contains(&chars[k]) {
                    k += 1;
                }
                if k == chars.len() || chars[k].is_whitespace() {
                    out.push((sent_start.take().unwrap(), k));
                    if k > 0 {
                        last_non_ws = k - 1;
                    }
                    i = k;
                    continue;
                }
            }
            i += 1;
        }
        if let Some(s) = sent_start {
            out.push((s, last_non_ws + 1));
        }
        out
    }

    fn is_abbreviation_at(&self, chars: &[char], dot: usize) -> bool {
        let mut j = dot;
        while j > 0 {
            let p = chars[j - 1];
            if p.is_alphanumeric() || p == '/' || p == '\'' {
                j -= 1;
            } else {
                break;
            }
        }
        if j == dot {
            return false;
        }
        let token: String = chars[j..dot].iter().collect::<String>().to_lowercase();
        self.abbrev_norms.contains(&token)
    }
}

fn normalize_marker(s: &str) -> String {
    normalize_marker_chars(&s.chars().collect::<Vec<_>>())
}

fn normalize_marker_chars(chars: &[char]) -> String {
    chars
        .iter()
        .filter(|c| c.is_alphabetic())
        .flat_map(|c| c.to_uppercase())
        .collect()
}

/// Split with the default configuration and bundled verb lexicon.
pub fn split_preamble(text: &str) -> usize {
    Segmenter::default().split_preamble(text, &LexiconVerbAnalyzer)
}

/// Segment with the default configuration.
pub fn segment_sentences(text: &str, region: (usize, usize)) -> Vec<(usize, usize)> {
    Segmenter::default().segment_sentences(text, region)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn char_index_of(text: &str, pat: &str) -> usize {
        let byte = text.find(pat).expect("pattern present");
        text[..byte].chars().count()
    }

    #[test]
    fn marker_line_ends_preamble() {
        let text = "IN THE SUPREME COURT\nState of Punjab ...Respondent\nJUDGMENT\nThis appeal is directed against the order.";
        let off = split_preamble(text);
        assert_eq!(off, char_index_of(text, "This appeal"));
    }

    #[test]
    fn spaced_and_punctuated_markers_match() {
        for marker in ["J U D G M E N T", "ORDER:", ": O R D E R :", "judgment"] {
            let text = format!("HEADER LINE\n{marker}\nBody starts here.");
            let off = split_preamble(&text);
            assert_eq!(off, char_index_of(&text, "Body starts"), "marker {marker:?}");
        }
    }

    #[test]
    fn ordered_line_is_not_a_marker() {
        // "ORDERED" must not collapse onto the ORDER keyword.
        let text = "ORDERED\nNo verbs here line\nAnother plain line";
        assert_eq!(split_preamble(text), 0);
    }

    #[test]
    fn first_two_sentences_with_verbs_mean_no_preamble() {
        let text = "This petition is filed under Article 226. The petitioner was arrested on Monday. More text follows.";
        assert_eq!(split_preamble(text), 0);
    }

    #[test]
    fn fallback_finds_first_verb_bearing_sentence() {
        // Hand-computed with the default analyzer: the three header lines
        // carry no lexicon verb and no -ed/-ing/-es token outside the
        // stoplist; both body sentences carry auxiliaries.
        let text = "IN THE HIGH COURT OF DELHI\nCIVIL APPEAL NO 123 OF 2020\nAMIT KUMAR versus STATE\nThis appeal is filed under Section 100. The court has heard both counsel.";
        let expected = char_index_of(text, "This appeal");
        assert_eq!(split_preamble(text), expected);
        // Re-running on the judgment slice finds verbs at the front: offset 0.
        let rest: String = text.chars().skip(expected).collect();
        assert_eq!(split_preamble(&rest), 0);
    }

    #[test]
    fn no_marker_and_no_verbs_yields_zero() {
        let text = "FIRST HEADER LINE\nSECOND HEADER LINE\nTHIRD LINE";
        assert_eq!(split_preamble(text), 0);
    }

    #[test]
    fn empty_text_yields_zero() {
        assert_eq!(split_preamble(""), 0);
    }

    #[test]
    fn marker_as_final_line_leaves_empty_judgment() {
        let text = "IN THE COURT\nParties listed\nJUDGMENT";
        let off = split_preamble(text);
        assert_eq!(off, text.chars().count());
        assert!(segment_sentences(text, (off, text.chars().count())).is_empty());
    }

    #[test]
    fn split_concatenation_identity() {
        let text = "HEADER\nJUDGMENT\nBody sentence is here. Another one was added.";
        let off = split_preamble(text);
        let head: String = text.chars().take(off).collect();
        let tail: String = text.chars().skip(off).collect();
        assert_eq!(format!("{head}{tail}"), text);
    }

    #[test]
    fn versus_abbreviation_does_not_split() {
        // Hand-checked against the guard list: "v." guards, "B." does not.
        let sents = segment_sentences("A v. B. He won.", (0, 15));
        assert_eq!(sents, vec![(0, 7), (8, 15)]);
    }

    #[test]
    fn empty_region_yields_no_sentences() {
        assert_eq!(segment_sentences("", (0, 0)), Vec::<(usize, usize)>::new());
        assert_eq!(segment_sentences("abc", (2, 2)), Vec::<(usize, usize)>::new());
    }

    #[test]
    fn unterminated_text_is_one_sentence() {
        assert_eq!(segment_sentences("no terminator here", (0, 18)), vec![(0, 18)]);
    }

    #[test]
    fn guards_and_decimals_hold() {
        let text = "Mr. Kumar paid 5.5 lakhs on 1.1.2020. The No. 5 case was listed.";
        let sents = segment_sentences(text, (0, text.chars().count()));
        assert_eq!(sents.len(), 2);
        assert_eq!(sents[0].0, 0);
        assert_eq!(sents[1].1, text.chars().count());
        let first: String = text.chars().take(sents[0].1).collect();
        assert!(first.ends_with("1.1.2020."));
    }

    #[test]
    fn question_and_exclamation_terminate() {
        let sents = segment_sentences("Was he there? He was! Yes.", (0, 26));
        assert_eq!(sents.len(), 3);
    }

    #[test]
    fn closing_quote_is_included() {
        let text = "He said \"stop.\" Then left.";
        let sents = segment_sentences(text, (0, text.chars().count()));
        assert_eq!(sents.len(), 2);
        assert_eq!(sents[0], (0, 15));
    }

    #[test]
    fn ranges_cover_all_non_whitespace() {
        let text = "  One here.   Two there.  Three";
        let sents = segment_sentences(text, (0, text.chars().count()));
        let chars: Vec<char> = text.chars().collect();
        for (i, c) in chars.iter().enumerate() {
            if !c.is_whitespace() {
                assert!(
                    sents.iter().any(|&(s, e)| s <= i && i < e),
                    "char {i} ({c:?}) not covered"
                );
            }
        }
        for pair in sents.windows(2) {
            assert!(pair[0].1 <= pair[1].0);
        }
    }
}
