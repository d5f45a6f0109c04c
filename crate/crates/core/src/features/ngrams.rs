//! Unigram and bigram term extraction for the ngram block.

use crate::text::AnnotatedText;

/// Lowercased unigrams plus within-sentence adjacent bigrams joined by `_`.
/// Punctuation tokens are excluded before pairing, so bigrams never span
/// punctuation or sentence boundaries.
pub fn ngram_terms(annotated: &AnnotatedText) -> Vec<String> {
    let mut terms = Vec::new();
    for sentence in 0..annotated.n_sentences() {
        let words: Vec<&str> = annotated
            .sentence_tokens(sentence)
            .filter(|t| t.is_word())
            .map(|t| t.lower.as_str())
            .collect();
        terms.extend(words.iter().map(|w| w.to_string()));
        terms.extend(words.windows(2).map(|pair| format!("{}_{}", pair[0], pair[1])));
    }
    terms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::annotate;

    #[test]
    fn unigrams_and_bigram() {
        let a = annotate("miracle cure");
        assert_eq!(ngram_terms(&a), ["miracle", "cure", "miracle_cure"]);
    }

    #[test]
    fn single_token_has_no_bigram() {
        let a = annotate("prostate");
        assert_eq!(ngram_terms(&a), ["prostate"]);
    }

    #[test]
    fn no_cross_sentence_bigrams() {
        // hand enumeration under the within-sentence rule: sentences
        // [a b][c] produce bigram a_b only
        let a = annotate("Aa bb. Cc.");
        let terms = ngram_terms(&a);
        assert!(terms.contains(&"aa_bb".to_string()));
        assert!(!terms.iter().any(|t| t.contains("bb_cc")));
        assert_eq!(terms, ["aa", "bb", "aa_bb", "cc"]);
    }

    #[test]
    fn punctuation_excluded() {
        let a = annotate("well, cure works");
        let terms = ngram_terms(&a);
        assert!(!terms.iter().any(|t| t.contains(',')));
        // the comma is removed before pairing, so well_cure is adjacent
        assert!(terms.contains(&"well_cure".to_string()));
    }
}
