//! Lexicon-class percentages over word tokens, LIWC-compatible.
//!
//! The lexicon file format is `category<TAB>pattern`, one pattern per line;
//! a trailing `*` makes the pattern a prefix match. No lexicon data is
//! bundled; the user supplies a compatible file.

use std::collections::HashSet;
use std::path::Path;

use super::{BlockName, FeatureBlock, FeatureError};
use crate::text::AnnotatedText;

/// Ordered word-class lexicon with literal and stem patterns per category.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    categories: Vec<String>,
    literals: Vec<HashSet<String>>,
    prefixes: Vec<Vec<String>>,
}

impl Lexicon {
    /// Parse from `category<TAB>pattern` lines. Categories are ordered by
    /// first appearance; blank lines and `#` comments are skipped.
    pub fn parse(content: &str) -> Result<Lexicon, FeatureError> {
        let mut lex = Lexicon {
            categories: Vec::new(),
            literals: Vec::new(),
            prefixes: Vec::new(),
        };
        for (idx, raw) in content.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (category, pattern) =
                line.split_once('\t')
                    .ok_or_else(|| FeatureError::LexiconFormat {
                        line: idx + 1,
                        reason: "expected `category<TAB>pattern`".to_string(),
                    })?;
            let category = category.trim();
            let pattern = pattern.trim().to_lowercase();
            if category.is_empty() || pattern.is_empty() {
                return Err(FeatureError::LexiconFormat {
                    line: idx + 1,
                    reason: "empty category or pattern".to_string(),
                });
            }
            let cat_idx = match lex.categories.iter().position(|c| c == category) {
                Some(i) => i,
                None => {
                    lex.categories.push(category.to_string());
                    lex.literals.push(HashSet::new());
                    lex.prefixes.push(Vec::new());
                    lex.categories.len() - 1
                }
            };
            if let Some(stem) = pattern.strip_suffix('*') {
                if stem.is_empty() {
                    return Err(FeatureError::LexiconFormat {
                        line: idx + 1,
                        reason: "bare `*` pattern".to_string(),
                    });
                }
                lex.prefixes[cat_idx].push(stem.to_string());
            } else {
                lex.literals[cat_idx].insert(pattern);
            }
        }
        if lex.categories.is_empty() {
            return Err(FeatureError::EmptyLexicon);
        }
        Ok(lex)
    }

    pub fn load(path: &Path) -> Result<Lexicon, FeatureError> {
        let content = std::fs::read_to_string(path).map_err(|source| FeatureError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&content)
    }

    pub fn categories(&self) -> &[String] {
        &self.categories
    }

    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    fn matches(&self, cat: usize, lower: &str) -> bool {
        self.literals[cat].contains(lower)
            || self.prefixes[cat].iter().any(|p| lower.starts_with(p.as_str()))
    }
}

/// Percentage of word tokens matching each category. One token may match
/// many categories, so the percentages need not sum to 100.
pub fn lexicon_features(
    annotated: &AnnotatedText,
    lexicon: &Lexicon,
) -> Result<FeatureBlock, FeatureError> {
    if lexicon.is_empty() {
        return Err(FeatureError::EmptyLexicon);
    }
    let words: Vec<&str> = annotated.word_tokens().map(|t| t.lower.as_str()).collect();
    if words.is_empty() {
        return Err(FeatureError::EmptyText);
    }

    let total = words.len() as f64;
    let values: Vec<f64> = (0..lexicon.len())
        .map(|cat| {
            let matched = words.iter().filter(|w| lexicon.matches(cat, w)).count();
            100.0 * matched as f64 / total
        })
        .collect();

    Ok(FeatureBlock::dense(
        BlockName::Lexicon,
        values,
        lexicon.categories.clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::annotate;

    #[test]
    fn stem_and_literal_matching() {
        let lex = Lexicon::parse("pos\tgood\npos\thapp*\n").unwrap();
        let a = annotate("good happy sad happiness");
        let block = lexicon_features(&a, &lex).unwrap();
        // 3 of 4 tokens match: good, happy, happiness
        assert_eq!(block.values.get(0), 75.0);
    }

    #[test]
    fn unmatched_category_is_zero() {
        let lex = Lexicon::parse("pos\tgood\nneg\tterrible\n").unwrap();
        let a = annotate("good day");
        let block = lexicon_features(&a, &lex).unwrap();
        assert_eq!(block.values.get(0), 50.0);
        assert_eq!(block.values.get(1), 0.0);
    }

    #[test]
    fn dim_equals_category_count_in_first_appearance_order() {
        let lex = Lexicon::parse("b\tx\na\ty\nb\tz\n").unwrap();
        assert_eq!(lex.categories(), ["b", "a"]);
        let a = annotate("x y z");
        let block = lexicon_features(&a, &lex).unwrap();
        assert_eq!(block.dim(), 2);
    }

    #[test]
    fn percentages_stay_in_range() {
        let lex = Lexicon::parse("all\t*matchless\nwide\ta*\nwide\tb*\nwide\tc*\n");
        // a bare-star is rejected
        assert!(lex.is_err());
        let lex = Lexicon::parse("wide\ta*\nwide\tb*\nwide\tc*\n").unwrap();
        let a = annotate("apple banana cherry");
        let block = lexicon_features(&a, &lex).unwrap();
        assert_eq!(block.values.get(0), 100.0);
    }

    #[test]
    fn rejects_empty_and_malformed() {
        assert!(matches!(Lexicon::parse(""), Err(FeatureError::EmptyLexicon)));
        assert!(matches!(
            Lexicon::parse("no-tab-here\n"),
            Err(FeatureError::LexiconFormat { line: 1, .. })
        ));
    }

    #[test]
    fn multi_membership_can_exceed_hundred_total() {
        let lex = Lexicon::parse("one\tcure\ntwo\tcure\n").unwrap();
        let a = annotate("cure");
        let block = lexicon_features(&a, &lex).unwrap();
        let sum: f64 = block.values.to_dense().iter().sum();
        assert_eq!(sum, 200.0);
    }
}
