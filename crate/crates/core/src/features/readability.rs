//! The 35-slot readability block: surface statistics, word-usage and
//! sentence-beginning proportions, and nine standard readability indices.

use std::collections::HashSet;

use super::{BlockName, FeatureBlock, FeatureError};
use crate::text::AnnotatedText;

pub const READABILITY_DIM: usize = 35;

const TO_BE: &[&str] = &["be", "being", "was", "were", "been", "are", "is", "am"];

const AUXILIARY: &[&str] = &[
    "will", "shall", "cannot", "may", "need", "would", "should", "could", "might", "must",
    "ought", "can",
];

const CONJUNCTION: &[&str] = &["and", "but", "or", "yet", "nor"];

const PRONOUN: &[&str] = &[
    "i", "me", "we", "us", "you", "he", "him", "she", "her", "it", "they", "them", "thou",
    "thee", "ye", "hers", "our", "ours", "your", "yours", "their", "theirs", "my", "mine",
    "his", "its", "this", "that", "these", "those", "who", "whom", "what", "which", "whose",
    "whoever", "whatever", "whichever", "whomever", "anybody", "anyone", "anything", "each",
    "either", "everybody", "everyone", "everything", "neither", "nobody", "nothing", "one",
    "somebody", "someone", "something", "myself", "yourself", "himself", "herself", "itself",
    "ourselves", "yourselves", "themselves",
];

const PREPOSITION: &[&str] = &[
    "about", "above", "across", "after", "against", "along", "among", "around", "at",
    "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "despite",
    "down", "during", "except", "for", "from", "in", "inside", "into", "like", "near", "of",
    "off", "on", "onto", "out", "outside", "over", "past", "since", "through", "throughout",
    "till", "to", "toward", "towards", "under", "underneath", "until", "up", "upon", "with",
    "within", "without",
];

const INTERROGATIVE: &[&str] = &["who", "what", "where", "when", "why", "how", "which", "whom", "whose"];

const ARTICLE: &[&str] = &["the", "a", "an"];

const SUBORDINATION: &[&str] = &[
    "after", "because", "lest", "till", "although", "before", "unless", "as", "provided",
    "until", "if", "since", "when", "whenever", "whereas", "while", "though", "once",
];

const NOMINALIZATION_SUFFIXES: &[&str] = &["tion", "ment", "ence", "ance"];

fn is_nominalization(lower: &str) -> bool {
    lower.chars().count() > 7 && NOMINALIZATION_SUFFIXES.iter().any(|s| lower.ends_with(s))
}

/// Per-transcript surface counts feeding the index formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceCounts {
    pub characters: usize,
    pub syllables: usize,
    pub words: usize,
    pub word_types: usize,
    pub sentences: usize,
    /// Transcripts carry no paragraph marks; always 1.
    pub paragraphs: usize,
    /// Words of at least 7 characters.
    pub long_words: usize,
    /// Words of at least 3 syllables.
    pub complex_words: usize,
    /// Words absent from the familiar-word list.
    pub difficult_words: usize,
}

fn surface_counts(annotated: &AnnotatedText, familiar: &HashSet<String>) -> SurfaceCounts {
    let mut characters = 0usize;
    let mut syllables = 0usize;
    let mut words = 0usize;
    let mut long_words = 0usize;
    let mut complex_words = 0usize;
    let mut difficult_words = 0usize;
    let mut types: HashSet<&str> = HashSet::new();

    for t in annotated.word_tokens() {
        words += 1;
        let chars = t.surface.chars().filter(|c| c.is_alphanumeric()).count();
        characters += chars;
        syllables += t.syllables;
        if chars >= 7 {
            long_words += 1;
        }
        if t.syllables >= 3 {
            complex_words += 1;
        }
        if !familiar.contains(&t.lower) {
            difficult_words += 1;
        }
        types.insert(t.lower.as_str());
    }

    SurfaceCounts {
        characters,
        syllables,
        words,
        word_types: types.len(),
        sentences: annotated.n_sentences(),
        paragraphs: 1,
        long_words,
        complex_words,
        difficult_words,
    }
}

/// The nine readability indices, in block order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Indices {
    pub ari: f64,
    pub flesch_kincaid_grade: f64,
    pub flesch_reading_ease: f64,
    pub coleman_liau: f64,
    pub gunning_fog: f64,
    pub lix: f64,
    pub smog: f64,
    pub rix: f64,
    pub dale_chall: f64,
}

/// Evaluate the nine indices from surface counts using their canonical
/// published formulas.
pub fn indices(c: &SurfaceCounts) -> Indices {
    let chars = c.characters as f64;
    let syll = c.syllables as f64;
    let words = c.words as f64;
    let sents = c.sentences as f64;
    let long = c.long_words as f64;
    let complex = c.complex_words as f64;
    let difficult = c.difficult_words as f64;

    let difficult_pct = 100.0 * difficult / words;
    let mut dale_chall = 0.1579 * difficult_pct + 0.0496 * (words / sents);
    if difficult_pct > 5.0 {
        dale_chall += 3.6365;
    }

    Indices {
        ari: 4.71 * (chars / words) + 0.5 * (words / sents) - 21.43,
        flesch_kincaid_grade: 0.39 * (words / sents) + 11.8 * (syll / words) - 15.59,
        flesch_reading_ease: 206.835 - 1.015 * (words / sents) - 84.6 * (syll / words),
        coleman_liau: 0.0588 * (100.0 * chars / words) - 0.296 * (100.0 * sents / words) - 15.8,
        gunning_fog: 0.4 * ((words / sents) + 100.0 * (complex / words)),
        lix: words / sents + 100.0 * (long / words),
        smog: 1.043 * (complex * 30.0 / sents).sqrt() + 3.1291,
        rix: long / sents,
        dale_chall,
    }
}

pub fn readability_feature_names() -> Vec<String> {
    [
        "chars",
        "syllables",
        "words",
        "word_types",
        "sentences",
        "paragraphs",
        "long_words",
        "complex_words",
        "dale_chall_difficult",
        "chars_per_word",
        "syllables_per_word",
        "words_per_sentence",
        "sentences_per_paragraph",
        "type_token_ratio",
        "tobeverb_per_word",
        "auxverb_per_word",
        "conjunction_per_word",
        "pronoun_per_word",
        "preposition_per_word",
        "nominalization_per_word",
        "begin_pronoun_per_sentence",
        "begin_interrogative_per_sentence",
        "begin_article_per_sentence",
        "begin_subordination_per_sentence",
        "begin_conjunction_per_sentence",
        "begin_preposition_per_sentence",
        "ari",
        "flesch_kincaid_grade",
        "flesch_reading_ease",
        "coleman_liau",
        "gunning_fog",
        "lix",
        "smog",
        "rix",
        "dale_chall",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Extract the fixed 35-slot readability block.
///
/// Layout: 14 surface statistics, 6 word-usage proportions, 6
/// sentence-beginning proportions, 9 indices.
pub fn readability_features(
    annotated: &AnnotatedText,
    familiar: &HashSet<String>,
) -> Result<FeatureBlock, FeatureError> {
    if annotated.n_sentences() == 0 || annotated.n_words() == 0 {
        return Err(FeatureError::EmptyText);
    }
    let c = surface_counts(annotated, familiar);
    let words = c.words as f64;
    let sents = c.sentences as f64;

    let count_in = |list: &[&str]| -> f64 {
        annotated
            .word_tokens()
            .filter(|t| list.contains(&t.lower.as_str()))
            .count() as f64
    };
    let nominalizations = annotated
        .word_tokens()
        .filter(|t| is_nominalization(&t.lower))
        .count() as f64;

    let begin_in = |list: &[&str]| -> f64 {
        (0..annotated.n_sentences())
            .filter_map(|s| annotated.sentence_tokens(s).find(|t| t.is_word()))
            .filter(|t| list.contains(&t.lower.as_str()))
            .count() as f64
    };

    let idx = indices(&c);
    let values = vec![
        c.characters as f64,
        c.syllables as f64,
        c.words as f64,
        c.word_types as f64,
        c.sentences as f64,
        c.paragraphs as f64,
        c.long_words as f64,
        c.complex_words as f64,
        c.difficult_words as f64,
        c.characters as f64 / words,
        c.syllables as f64 / words,
        words / sents,
        sents / c.paragraphs as f64,
        c.word_types as f64 / words,
        count_in(TO_BE) / words,
        count_in(AUXILIARY) / words,
        count_in(CONJUNCTION) / words,
        count_in(PRONOUN) / words,
        count_in(PREPOSITION) / words,
        nominalizations / words,
        begin_in(PRONOUN) / sents,
        begin_in(INTERROGATIVE) / sents,
        begin_in(ARTICLE) / sents,
        begin_in(SUBORDINATION) / sents,
        begin_in(CONJUNCTION) / sents,
        begin_in(PREPOSITION) / sents,
        idx.ari,
        idx.flesch_kincaid_grade,
        idx.flesch_reading_ease,
        idx.coleman_liau,
        idx.gunning_fog,
        idx.lix,
        idx.smog,
        idx.rix,
        idx.dale_chall,
    ];
    debug_assert_eq!(values.len(), READABILITY_DIM);

    Ok(FeatureBlock::dense(
        BlockName::Readability,
        values,
        readability_feature_names(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::annotate;
    use approx::assert_abs_diff_eq;

    fn familiar_all() -> HashSet<String> {
        // every word in the test snippets, so difficult = 0 unless stated
        [
            "the", "cat", "sat", "doctor", "spoke", "with", "care", "he", "gave", "us", "a",
            "simple", "plan", "we", "read", "note", "at", "home", "was", "clear", "and",
            "short", "some", "facts", "were", "new", "to", "chose", "follow",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect()
    }

    #[test]
    fn dim_is_35() {
        let a = annotate("The cat sat.");
        let block = readability_features(&a, &familiar_all()).unwrap();
        assert_eq!(block.dim(), READABILITY_DIM);
        assert_eq!(block.feature_names.len(), READABILITY_DIM);
    }

    #[test]
    fn flesch_reading_ease_hand_computed() {
        // "The cat sat." : 3 words, 1 sentence, 3 syllables
        let a = annotate("The cat sat.");
        let block = readability_features(&a, &familiar_all()).unwrap();
        let fre = block.values.get(28);
        assert_abs_diff_eq!(fre, 206.835 - 1.015 * 3.0 - 84.6 * 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fre, 119.19, epsilon = 1e-9);
    }

    #[test]
    fn lix_hand_computed() {
        // no words longer than 6 letters: LIX = 3/1 + 100*(0/3) = 3.0
        let a = annotate("The cat sat.");
        let block = readability_features(&a, &familiar_all()).unwrap();
        assert_abs_diff_eq!(block.values.get(31), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn counts_are_exact() {
        let a = annotate("The cat sat.");
        let block = readability_features(&a, &familiar_all()).unwrap();
        assert_eq!(block.values.get(0), 9.0); // characters
        assert_eq!(block.values.get(1), 3.0); // syllables
        assert_eq!(block.values.get(2), 3.0); // words
        assert_eq!(block.values.get(3), 3.0); // types
        assert_eq!(block.values.get(4), 1.0); // sentences
        assert_eq!(block.values.get(5), 1.0); // paragraphs
    }

    #[test]
    fn errors_on_empty_text() {
        let a = annotate("");
        assert!(readability_features(&a, &familiar_all()).is_err());
    }

    #[test]
    fn word_usage_proportions() {
        let a = annotate("The cat was with us and him.");
        let block = readability_features(&a, &familiar_all()).unwrap();
        let words = 7.0;
        assert_abs_diff_eq!(block.values.get(14), 1.0 / words, epsilon = 1e-12); // was
        assert_abs_diff_eq!(block.values.get(16), 1.0 / words, epsilon = 1e-12); // and
        assert_abs_diff_eq!(block.values.get(17), 2.0 / words, epsilon = 1e-12); // us, him
        assert_abs_diff_eq!(block.values.get(18), 1.0 / words, epsilon = 1e-12); // with
        // sentence begins with article
        assert_abs_diff_eq!(block.values.get(22), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn dale_chall_adjustment_above_five_percent() {
        // all words unfamiliar: 100% difficult -> +3.6365 applies
        let a = annotate("Zyx wvu tsr.");
        let block = readability_features(&a, &HashSet::new()).unwrap();
        let expected = 0.1579 * 100.0 + 0.0496 * 3.0 + 3.6365;
        assert_abs_diff_eq!(block.values.get(34), expected, epsilon = 1e-12);
    }
}
