//! Deterministic text annotation: sentence splitting, tokenization, syllable
//! counting, bracketed parse-tree handling, and POS utilities.
//!
//! Everything here is rule-based and pure, so annotation of a transcript is
//! reproducible byte-for-byte across runs and machines.

mod pos;
mod sentence;
mod syllable;
mod token;
mod tree;

pub use pos::{attach_pos, pos_is_lexical, token_is_lexical, PosError};
pub use sentence::split_sentences;
pub use syllable::count_syllables;
pub use token::tokenize;
pub use tree::{extract_productions, parse_bracketed, ParseTree, ProductionFeature, TreeError};

/// One token of an annotated transcript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Token exactly as it appears in the text.
    pub surface: String,
    /// Lowercased form used for matching and vocabulary lookups.
    pub lower: String,
    /// Penn-Treebank-style POS tag, when a sidecar supplied one.
    pub pos: Option<String>,
    /// Heuristic syllable count, always at least one.
    pub syllables: usize,
}

impl Token {
    /// A word token contains at least one alphanumeric character;
    /// everything else is punctuation.
    pub fn is_word(&self) -> bool {
        self.surface.chars().any(|c| c.is_alphanumeric())
    }
}

/// Sentence-segmented, tokenized transcript with per-token annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedText {
    /// Token indices grouped by sentence; concatenating them yields `tokens`.
    pub sentences: Vec<Vec<usize>>,
    pub tokens: Vec<Token>,
    /// Total alphanumeric characters across word tokens.
    pub char_count_letters: usize,
}

impl AnnotatedText {
    pub fn word_tokens(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| t.is_word())
    }

    pub fn n_words(&self) -> usize {
        self.word_tokens().count()
    }

    pub fn n_sentences(&self) -> usize {
        self.sentences.len()
    }

    /// Tokens of one sentence, in order.
    pub fn sentence_tokens(&self, sentence: usize) -> impl Iterator<Item = &Token> {
        self.sentences[sentence].iter().map(|&i| &self.tokens[i])
    }
}

/// Annotate raw text: split sentences, tokenize, count syllables.
///
/// Punctuation tokens get a syllable count of one so that every token
/// satisfies the `syllables >= 1` invariant.
pub fn annotate(text: &str) -> AnnotatedText {
    let mut tokens = Vec::new();
    let mut sentences = Vec::new();
    let mut char_count = 0usize;

    for sentence in split_sentences(text) {
        let mut idx = Vec::new();
        for surface in tokenize(&sentence) {
            let lower = surface.to_lowercase();
            let syllables = count_syllables(&surface).unwrap_or(1);
            if surface.chars().any(|c| c.is_alphanumeric()) {
                char_count += surface.chars().filter(|c| c.is_alphanumeric()).count();
            }
            idx.push(tokens.len());
            tokens.push(Token {
                surface,
                lower,
                pos: None,
                syllables,
            });
        }
        if !idx.is_empty() {
            sentences.push(idx);
        }
    }

    AnnotatedText {
        sentences,
        tokens,
        char_count_letters: char_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn annotate_flat_tokens_match_sentence_concat() {
        let a = annotate("I was diagnosed. I chose the alternative route.");
        assert_eq!(a.n_sentences(), 2);
        let concat: Vec<usize> = a.sentences.iter().flatten().copied().collect();
        assert_eq!(concat, (0..a.tokens.len()).collect::<Vec<_>>());
        assert!(a.tokens.iter().all(|t| t.syllables >= 1));
    }

    #[test]
    fn annotate_counts_alphanumeric_chars() {
        let a = annotate("The cat sat.");
        // The(3) + cat(3) + sat(3), the period contributes nothing.
        assert_eq!(a.char_count_letters, 9);
        assert_eq!(a.n_words(), 3);
    }

    proptest! {
        #[test]
        fn tokenize_preserves_alphanumeric_multiset(s in "[ -~]{0,80}") {
            let mut input: Vec<char> = s.chars().filter(|c| c.is_alphanumeric()).collect();
            let mut output: Vec<char> = annotate(&s)
                .tokens
                .iter()
                .flat_map(|t| t.surface.chars())
                .filter(|c| c.is_alphanumeric())
                .collect();
            input.sort_unstable();
            output.sort_unstable();
            prop_assert_eq!(input, output);
        }

        #[test]
        fn every_token_has_a_syllable(s in "[a-zA-Z ,.!?']{1,60}") {
            for t in annotate(&s).tokens {
                prop_assert!(t.syllables >= 1);
            }
        }
    }
}
