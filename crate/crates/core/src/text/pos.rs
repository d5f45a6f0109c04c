//! POS tag utilities and sidecar ingestion.

use thiserror::Error;

use super::AnnotatedText;

/// Lemmas treated as auxiliaries rather than lexical verbs.
const AUXILIARY_LEMMAS: &[&str] = &[
    "be", "am", "is", "are", "was", "were", "been", "being", "have", "has", "had", "having",
    "do", "does", "did", "doing", "'s", "'re", "'ve", "'m", "'d", "ca", "wo", "sha",
];

/// True iff a Penn-Treebank-style tag marks a content-word class: nouns
/// (`NN*`), verbs (`VB*`), adjectives (`JJ*`), or adverbs (`RB*`).
///
/// Modals (`MD`) and unknown tags are treated as function words. Auxiliary
/// verb forms share `VB*` tags with lexical verbs, so callers that have the
/// token available should use [`token_is_lexical`].
pub fn pos_is_lexical(tag: &str) -> bool {
    tag.starts_with("NN") || tag.starts_with("VB") || tag.starts_with("JJ") || tag.starts_with("RB")
}

/// Tag-level lexical check refined with the auxiliary lemma stop-list:
/// `was_VBD` is not a lexical verb even though its tag is `VB*`.
pub fn token_is_lexical(lower: &str, tag: &str) -> bool {
    if !pos_is_lexical(tag) {
        return false;
    }
    if tag.starts_with("VB") && AUXILIARY_LEMMAS.contains(&lower) {
        return false;
    }
    true
}

/// True for main-verb tokens: `VB*` tags minus auxiliaries and modals.
pub fn token_is_main_verb(lower: &str, tag: &str) -> bool {
    tag.starts_with("VB") && !AUXILIARY_LEMMAS.contains(&lower)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosError {
    #[error("POS sidecar has {got} lines but the text has {expected} sentences")]
    SentenceCountMismatch { expected: usize, got: usize },
    #[error(
        "POS misalignment in sentence {sentence}: position {position} expects token `{expected}`, sidecar has `{found}`"
    )]
    TokenMismatch {
        sentence: usize,
        position: usize,
        expected: String,
        found: String,
    },
    #[error("sentence {sentence} has {expected} tokens but the sidecar line has {got} pairs")]
    TokenCountMismatch {
        sentence: usize,
        expected: usize,
        got: usize,
    },
    #[error("malformed pair `{pair}` in sidecar sentence {sentence}: expected token_POS")]
    MalformedPair { sentence: usize, pair: String },
}

/// Attach POS tags from sidecar lines (one line per sentence, space-separated
/// `token_POS` pairs). Tokens must align one-to-one with the tokenizer's
/// output for each sentence.
pub fn attach_pos(annotated: &mut AnnotatedText, lines: &[String]) -> Result<(), PosError> {
    if lines.len() != annotated.sentences.len() {
        return Err(PosError::SentenceCountMismatch {
            expected: annotated.sentences.len(),
            got: lines.len(),
        });
    }

    let mut assignments: Vec<(usize, String)> = Vec::with_capacity(annotated.tokens.len());
    for (s_idx, line) in lines.iter().enumerate() {
        let pairs: Vec<&str> = line.split_whitespace().collect();
        let token_ids = &annotated.sentences[s_idx];
        if pairs.len() != token_ids.len() {
            return Err(PosError::TokenCountMismatch {
                sentence: s_idx + 1,
                expected: token_ids.len(),
                got: pairs.len(),
            });
        }
        for (p_idx, (&tok_id, pair)) in token_ids.iter().zip(&pairs).enumerate() {
            let (word, tag) = pair.rsplit_once('_').ok_or_else(|| PosError::MalformedPair {
                sentence: s_idx + 1,
                pair: pair.to_string(),
            })?;
            let surface = &annotated.tokens[tok_id].surface;
            if word != surface {
                return Err(PosError::TokenMismatch {
                    sentence: s_idx + 1,
                    position: p_idx + 1,
                    expected: surface.clone(),
                    found: word.to_string(),
                });
            }
            assignments.push((tok_id, tag.to_string()));
        }
    }

    for (tok_id, tag) in assignments {
        annotated.tokens[tok_id].pos = Some(tag);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::annotate;

    #[test]
    fn noun_is_lexical_determiner_is_not() {
        assert!(pos_is_lexical("NN"));
        assert!(pos_is_lexical("NNS"));
        assert!(pos_is_lexical("VBD"));
        assert!(pos_is_lexical("JJR"));
        assert!(pos_is_lexical("RB"));
        assert!(!pos_is_lexical("DT"));
        assert!(!pos_is_lexical("MD"));
        assert!(!pos_is_lexical("IN"));
        assert!(!pos_is_lexical("XYZ"));
    }

    #[test]
    fn auxiliary_verbs_are_not_lexical_tokens() {
        assert!(token_is_lexical("ran", "VBD"));
        assert!(!token_is_lexical("was", "VBD"));
        assert!(!token_is_lexical("is", "VBZ"));
        assert!(token_is_lexical("tests", "NNS"));
    }

    #[test]
    fn attach_pos_aligns_with_tokenizer() {
        let mut a = annotate("The test ran.");
        attach_pos(&mut a, &["The_DT test_NN ran_VBD ._.".to_string()]).unwrap();
        let tags: Vec<_> = a.tokens.iter().map(|t| t.pos.clone().unwrap()).collect();
        assert_eq!(tags, ["DT", "NN", "VBD", "."]);
    }

    #[test]
    fn attach_pos_rejects_misalignment() {
        let mut a = annotate("The test ran.");
        let err = attach_pos(&mut a, &["The_DT exam_NN ran_VBD ._.".to_string()]).unwrap_err();
        assert!(matches!(err, PosError::TokenMismatch { sentence: 1, position: 2, .. }));
        // no partial assignment after failure
        assert!(a.tokens.iter().all(|t| t.pos.is_none()));

        let err = attach_pos(&mut a, &["The_DT test_NN".to_string()]).unwrap_err();
        assert!(matches!(err, PosError::TokenCountMismatch { .. }));

        let err = attach_pos(&mut a, &[]).unwrap_err();
        assert!(matches!(err, PosError::SentenceCountMismatch { .. }));
    }
}
