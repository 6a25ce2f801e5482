//! Bundled verb lexicon for the preamble/judgment split fallback.
//!
//! A sentence "has a verb" when it contains a token from the closed list
//! below, or a token of five or more letters ending in -ed/-ing/-es that is
//! not in the suffix stoplist. This avoids a POS-tagger dependency; callers
//! needing a real tagger can plug their own analyzer into the segmenter.

use std::collections::HashSet;
use std::sync::LazyLock;

/// Auxiliaries, copulas and verbs common in judgment prose, including
/// irregular past forms and third-person forms the suffix rule misses.
pub static VERB_LEXICON: LazyLock<HashSet<&'static str>> = LazyLock::new(|| {
    [
        // Auxiliaries and copulas
        "is", "am", "are", "was", "were", "be", "been", "being", "has", "have", "had",
        "having", "do", "does", "did", "done", "shall", "should", "will", "would", "can",
        "could", "may", "might", "must", "ought", "need", "needs", "dare", "used",
        // Common verbs of judgment writing, base and irregular forms.
        // "state" and "order" are deliberately absent: in preambles they are
        // almost always nouns (party names, marker lines); the -ed suffix
        // rule still catches "stated" and "ordered".
        "hold", "holds", "held", "find", "finds", "found", "submit",
        "submits", "contend", "contends", "argue", "argued", "urge", "urges", "urged",
        "file", "filed", "allow", "allows", "allowed", "dismiss", "dismissed", "grant",
        "grants", "granted", "deny", "denied", "observe", "observed", "direct", "directs",
        "directed", "ordered", "quash", "quashed", "convict", "convicts",
        "convicted", "acquit", "acquits", "acquitted", "award", "awards", "awarded",
        "impose", "imposed", "rely", "relied", "refer", "refers", "referred", "pertain",
        "pertains", "read", "reads", "say", "says", "said", "see", "seen", "saw", "make",
        "makes", "made", "take", "takes", "took", "taken", "give", "gives", "gave", "given",
        "come", "comes", "came", "go", "goes", "went", "gone", "get", "gets", "got",
        "bring", "brings", "brought", "think", "thinks", "thought", "know", "knows", "knew",
        "known", "mean", "means", "meant", "become", "becomes", "became", "appear",
        "appears", "appeared", "seek", "seeks", "sought", "put", "puts", "pay", "pays",
        "paid", "tell", "tells", "told", "write", "writes", "wrote", "written", "arise",
        "arose", "arisen", "rise", "rose", "risen", "stand", "stands", "stood", "sit",
        "sits", "sat", "win", "wins", "won", "lose", "lost", "deal", "deals", "dealt",
        "keep", "keeps", "kept", "leave", "leaves", "left", "send", "sends", "sent",
        "spend", "spends", "spent", "understand", "understood", "begin", "begins", "began",
        "begun", "run", "runs", "ran", "fall", "falls", "fell", "fallen", "draw", "draws",
        "drew", "drawn", "show", "shows", "shown", "prove", "proves", "proved", "proven",
        "set", "sets", "seems", "seem", "remand", "remands", "remanded",
    ]
    .into_iter()
    .collect()
});

/// Words ending in -ed/-ing/-es that are not verbs in judgment text.
/// Preambles are full of these ("Limited", "Engineering", "Industries").
pub static SUFFIX_STOPLIST: LazyLock<HashSet<&'static str>> = LazyLock::new(|| {
    [
        // -ed
        "limited", "united", "retired", "learned", "aforesaid", "hundred", "aggrieved",
        // -ing
        "during", "notwithstanding", "anything", "everything", "nothing", "something",
        "thing", "king", "ring", "wing", "spring", "string", "morning", "evening",
        "building", "housing", "engineering", "printing", "mining", "trading", "shipping",
        "banking", "wedding", "sterling", "darjeeling", "ruling", "hearing",
        // -es
        "states", "premises", "industries", "companies", "enterprises", "services",
        "stores", "cases", "judges", "expenses", "damages", "offences", "charges",
        "times", "sometimes", "besides", "miles", "rupees", "fees", "taxes", "notes",
        "rules", "articles", "sections", "clauses", "statutes", "parties", "authorities",
        "witnesses", "proceedings", "territories", "miscellaneous",
    ]
    .into_iter()
    .collect()
});

/// Apply the lexicon + suffix heuristic to one lowercased token.
pub fn is_verb_token(token: &str) -> bool {
    if VERB_LEXICON.contains(token) {
        return true;
    }
    if token.chars().count() >= 5
        && (token.ends_with("ed") || token.ends_with("ing") || token.ends_with("es"))
    {
        return !SUFFIX_STOPLIST.contains(token);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auxiliaries_and_irregulars_hit() {
        for t in ["is", "was", "held", "filed", "sought"] {
            assert!(is_verb_token(t), "{t} should count as a verb");
        }
    }

    #[test]
    fn suffix_rule_with_stoplist() {
        assert!(is_verb_token("dismissed"));
        assert!(is_verb_token("alleging"));
        assert!(is_verb_token("argues"));
        // Preamble vocabulary must not trigger it.
        assert!(!is_verb_token("limited"));
        assert!(!is_verb_token("engineering"));
        assert!(!is_verb_token("industries"));
        // Too short for the suffix rule.
        assert!(!is_verb_token("res"));
        assert!(!is_verb_token("bed"));
    }

    #[test]
    fn plain_nouns_do_not_hit() {
        for t in ["court", "delhi", "appeal", "petitioner", "versus"] {
            assert!(!is_verb_token(t), "{t} should not count as a verb");
        }
    }
}
