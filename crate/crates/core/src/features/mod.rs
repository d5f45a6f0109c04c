//! Feature blocks: one named dense or sparse vector per modality per record.

pub mod engagement;
pub mod lexicon;
pub mod lexrich;
pub mod ngrams;
pub mod readability;
pub mod syntax;
pub mod tfidf;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The seven feature modalities, in canonical fusion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockName {
    Engagement,
    Lexicon,
    Ngrams,
    Lexrich,
    Syntax,
    Readability,
    Acoustic,
}

/// Canonical concatenation order for early fusion.
pub const CANONICAL_ORDER: [BlockName; 7] = [
    BlockName::Engagement,
    BlockName::Lexicon,
    BlockName::Ngrams,
    BlockName::Lexrich,
    BlockName::Syntax,
    BlockName::Readability,
    BlockName::Acoustic,
];

impl BlockName {
    pub fn as_str(&self) -> &'static str {
        match self {
            BlockName::Engagement => "engagement",
            BlockName::Lexicon => "lexicon",
            BlockName::Ngrams => "ngrams",
            BlockName::Lexrich => "lexrich",
            BlockName::Syntax => "syntax",
            BlockName::Readability => "readability",
            BlockName::Acoustic => "acoustic",
        }
    }

    pub fn parse(s: &str) -> Option<BlockName> {
        match s {
            "engagement" => Some(BlockName::Engagement),
            "lexicon" | "liwc" => Some(BlockName::Lexicon),
            "ngrams" => Some(BlockName::Ngrams),
            "lexrich" => Some(BlockName::Lexrich),
            "syntax" => Some(BlockName::Syntax),
            "readability" => Some(BlockName::Readability),
            "acoustic" => Some(BlockName::Acoustic),
            _ => None,
        }
    }

    pub fn all() -> &'static [BlockName; 7] {
        &CANONICAL_ORDER
    }
}

impl fmt::Display for BlockName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dense or sparse vector storage. Sparse entries are sorted by index and
/// strictly below `dim`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum BlockVector {
    Dense(Vec<f64>),
    Sparse { dim: usize, entries: Vec<(usize, f64)> },
}

impl BlockVector {
    pub fn dim(&self) -> usize {
        match self {
            BlockVector::Dense(v) => v.len(),
            BlockVector::Sparse { dim, .. } => *dim,
        }
    }

    pub fn nnz(&self) -> usize {
        match self {
            BlockVector::Dense(v) => v.iter().filter(|x| **x != 0.0).count(),
            BlockVector::Sparse { entries, .. } => entries.len(),
        }
    }

    /// Iterate nonzero (index, value) pairs in index order.
    pub fn iter_nonzero(&self) -> Box<dyn Iterator<Item = (usize, f64)> + '_> {
        match self {
            BlockVector::Dense(v) => Box::new(
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0.0)
                    .map(|(i, x)| (i, *x)),
            ),
            BlockVector::Sparse { entries, .. } => Box::new(entries.iter().copied()),
        }
    }

    pub fn get(&self, index: usize) -> f64 {
        match self {
            BlockVector::Dense(v) => v.get(index).copied().unwrap_or(0.0),
            BlockVector::Sparse { entries, .. } => entries
                .binary_search_by_key(&index, |(i, _)| *i)
                .map(|pos| entries[pos].1)
                .unwrap_or(0.0),
        }
    }

    pub fn norm(&self) -> f64 {
        self.iter_nonzero()
            .map(|(_, v)| v * v)
            .sum::<f64>()
            .sqrt()
    }

    /// Scale every entry in place.
    pub fn scale(&mut self, factor: f64) {
        match self {
            BlockVector::Dense(v) => v.iter_mut().for_each(|x| *x *= factor),
            BlockVector::Sparse { entries, .. } => {
                entries.iter_mut().for_each(|(_, x)| *x *= factor)
            }
        }
    }

    pub fn to_dense(&self) -> Vec<f64> {
        match self {
            BlockVector::Dense(v) => v.clone(),
            BlockVector::Sparse { dim, entries } => {
                let mut out = vec![0.0; *dim];
                for (i, v) in entries {
                    out[*i] = *v;
                }
                out
            }
        }
    }
}

/// Named feature vector for one modality of one record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureBlock {
    pub name: BlockName,
    pub values: BlockVector,
    pub feature_names: Vec<String>,
}

impl FeatureBlock {
    pub fn new(name: BlockName, values: BlockVector, feature_names: Vec<String>) -> Self {
        debug_assert_eq!(values.dim(), feature_names.len());
        FeatureBlock {
            name,
            values,
            feature_names,
        }
    }

    pub fn dense(name: BlockName, values: Vec<f64>, feature_names: Vec<String>) -> Self {
        Self::new(name, BlockVector::Dense(values), feature_names)
    }

    pub fn dim(&self) -> usize {
        self.values.dim()
    }
}

/// Why a block could not be extracted for a record. Skips are reported, not
/// silently zero-filled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SkipReason {
    NoParseTrees,
    NoPosTags,
    NoAudio,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::NoParseTrees => write!(f, "record has no parse-tree sidecar"),
            SkipReason::NoPosTags => write!(f, "record has no POS sidecar"),
            SkipReason::NoAudio => write!(f, "record has no audio file"),
        }
    }
}

#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("cannot fit vocabulary on an empty corpus")]
    EmptyCorpus,
    #[error("minimum total frequency must be at least 1, got {0}")]
    BadThreshold(usize),
    #[error("empty lexicon")]
    EmptyLexicon,
    #[error("lexicon line {line}: {reason}")]
    LexiconFormat { line: usize, reason: String },
    #[error("text has no sentences or no words")]
    EmptyText,
    #[error("io error on {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_lookup_and_norm() {
        let v = BlockVector::Sparse {
            dim: 10,
            entries: vec![(1, 3.0), (7, 4.0)],
        };
        assert_eq!(v.dim(), 10);
        assert_eq!(v.get(1), 3.0);
        assert_eq!(v.get(2), 0.0);
        assert_eq!(v.norm(), 5.0);
        assert_eq!(v.nnz(), 2);
    }

    #[test]
    fn canonical_order_covers_every_block_once() {
        let mut names: Vec<&str> = CANONICAL_ORDER.iter().map(|b| b.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 7);
    }

    #[test]
    fn block_names_roundtrip_via_parse() {
        for b in CANONICAL_ORDER {
            assert_eq!(BlockName::parse(b.as_str()), Some(b));
        }
        assert_eq!(BlockName::parse("liwc"), Some(BlockName::Lexicon));
        assert_eq!(BlockName::parse("bogus"), None);
    }
}
