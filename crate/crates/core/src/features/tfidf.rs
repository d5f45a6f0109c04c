//! Frequency-thresholded vocabulary fitting and tf-idf vectorization,
//! shared by the ngram and syntax-production blocks.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{BlockName, BlockVector, FeatureBlock, FeatureError};

/// Fitted term vocabulary with the document statistics needed for idf.
///
/// Terms are sorted lexicographically; indices form a bijection onto
/// `0..len()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseVocab {
    terms: Vec<String>,
    doc_freq: Vec<usize>,
    total_freq: Vec<usize>,
    n_docs_fitted: usize,
    min_total_freq: usize,
}

impl SparseVocab {
    /// Fit a vocabulary over per-document term lists, retaining terms whose
    /// total occurrence count across all documents reaches `min_total_freq`.
    pub fn fit<S: AsRef<str>>(
        docs: &[Vec<S>],
        min_total_freq: usize,
    ) -> Result<SparseVocab, FeatureError> {
        if docs.is_empty() {
            return Err(FeatureError::EmptyCorpus);
        }
        if min_total_freq < 1 {
            return Err(FeatureError::BadThreshold(min_total_freq));
        }

        let mut totals: HashMap<&str, usize> = HashMap::new();
        let mut doc_freqs: HashMap<&str, usize> = HashMap::new();
        for doc in docs {
            let mut seen: HashMap<&str, ()> = HashMap::new();
            for term in doc {
                let term = term.as_ref();
                *totals.entry(term).or_insert(0) += 1;
                if seen.insert(term, ()).is_none() {
                    *doc_freqs.entry(term).or_insert(0) += 1;
                }
            }
        }

        let mut terms: Vec<&str> = totals
            .iter()
            .filter(|(_, &count)| count >= min_total_freq)
            .map(|(&t, _)| t)
            .collect();
        terms.sort_unstable();

        let doc_freq = terms.iter().map(|t| doc_freqs[t]).collect();
        let total_freq = terms.iter().map(|t| totals[t]).collect();
        Ok(SparseVocab {
            terms: terms.into_iter().map(String::from).collect(),
            doc_freq,
            total_freq,
            n_docs_fitted: docs.len(),
            min_total_freq,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.terms.binary_search_by(|t| t.as_str().cmp(term)).ok()
    }

    pub fn doc_freq(&self, index: usize) -> usize {
        self.doc_freq[index]
    }

    pub fn total_freq(&self, index: usize) -> usize {
        self.total_freq[index]
    }

    pub fn n_docs_fitted(&self) -> usize {
        self.n_docs_fitted
    }

    pub fn min_total_freq(&self) -> usize {
        self.min_total_freq
    }

    /// Smoothed inverse document frequency:
    /// `ln((1 + n_docs) / (1 + doc_freq)) + 1`, strictly positive.
    pub fn idf(&self, index: usize) -> f64 {
        ((1 + self.n_docs_fitted) as f64 / (1 + self.doc_freq[index]) as f64).ln() + 1.0
    }
}

/// tf-idf vector for one document: `count(term) * idf(term)` over the fitted
/// vocabulary. Out-of-vocabulary terms are ignored; an empty document yields
/// the zero vector.
pub fn tfidf_vector<S: AsRef<str>>(
    terms: &[S],
    vocab: &SparseVocab,
    block: BlockName,
) -> FeatureBlock {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for term in terms {
        if let Some(idx) = vocab.index_of(term.as_ref()) {
            *counts.entry(idx).or_insert(0) += 1;
        }
    }
    let mut entries: Vec<(usize, f64)> = counts
        .into_iter()
        .map(|(idx, count)| (idx, count as f64 * vocab.idf(idx)))
        .collect();
    entries.sort_unstable_by_key(|(i, _)| *i);

    FeatureBlock::new(
        block,
        BlockVector::Sparse {
            dim: vocab.len(),
            entries,
        },
        vocab.terms.clone(),
    )
}
