//! The 33-slot lexical richness block: raw counts, lexical density,
//! sophistication, number-of-different-words, type-token, and variation
//! measures.
//!
//! "Sophisticated" means the lowercase form is absent from the top 2000
//! entries of a rank-ordered reference wordlist. Verb measures use main
//! verbs only (auxiliaries and modals excluded).

use std::collections::HashSet;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BlockName, FeatureBlock, FeatureError, SkipReason};
use crate::text::{token_is_lexical, token_is_main_verb, AnnotatedText};

pub const LEXRICH_DIM: usize = 33;

/// Rank cutoff for the "sophisticated" judgement.
pub const SOPHISTICATION_CUTOFF: usize = 2000;

/// Sample size and draw count for the NDW sampling variants.
const NDW_SAMPLE: usize = 50;
const NDW_DRAWS: usize = 10;

/// Rank-ordered reference wordlist; only the top [`SOPHISTICATION_CUTOFF`]
/// entries matter.
#[derive(Debug, Clone)]
pub struct RefWordlist {
    top: HashSet<String>,
}

impl RefWordlist {
    pub fn from_lines<I: IntoIterator<Item = String>>(lines: I) -> RefWordlist {
        RefWordlist {
            top: lines
                .into_iter()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .take(SOPHISTICATION_CUTOFF)
                .collect(),
        }
    }

    /// Load from a file with one word per line, most frequent first.
    pub fn load(path: &Path) -> Result<RefWordlist, FeatureError> {
        let content = std::fs::read_to_string(path).map_err(|source| FeatureError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self::from_lines(content.lines().map(String::from)))
    }

    pub fn is_common(&self, lower: &str) -> bool {
        self.top.contains(lower)
    }
}

/// A computed block plus per-record warnings about degenerate denominators.
#[derive(Debug, Clone)]
pub struct BlockResult {
    pub block: FeatureBlock,
    pub warnings: Vec<String>,
}

/// Extraction outcome: the block, or a reported skip for a missing modality.
#[derive(Debug, Clone)]
pub enum Extraction {
    Ready(BlockResult),
    Skipped(SkipReason),
}

pub fn lexrich_feature_names() -> Vec<String> {
    [
        "word_types",
        "soph_word_types",
        "lex_types",
        "soph_lex_types",
        "word_tokens",
        "soph_word_tokens",
        "lex_tokens",
        "soph_lex_tokens",
        "lexical_density",
        "ls1",
        "ls2",
        "vs1",
        "vs2",
        "cvs1",
        "ndw",
        "ndwz50",
        "ndwerz50",
        "ndwesz50",
        "ttr",
        "msttr50",
        "cttr",
        "rttr",
        "logttr",
        "uber",
        "lv",
        "vv1",
        "svv1",
        "cvv1",
        "vv2",
        "nv",
        "adjv",
        "advv",
        "modv",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

fn distinct(words: &[(&str, &str)], pred: impl Fn(&str, &str) -> bool) -> usize {
    let mut set = HashSet::new();
    for (lower, tag) in words {
        if pred(lower, tag) {
            set.insert(*lower);
        }
    }
    set.len()
}

fn count(words: &[(&str, &str)], pred: impl Fn(&str, &str) -> bool) -> usize {
    words.iter().filter(|(l, t)| pred(l, t)).count()
}

fn ndw_of(slice: &[(&str, &str)]) -> usize {
    slice.iter().map(|(l, _)| *l).collect::<HashSet<_>>().len()
}

/// Compute the 33 lexical-richness measures.
///
/// Requires POS tags on every word token; records without POS sidecars are
/// skipped with an explicit report. Degenerate denominators produce 0 and a
/// warning naming the measure.
pub fn lexrich_features(
    annotated: &AnnotatedText,
    wordlist: &RefWordlist,
    seed: u64,
) -> Result<Extraction, FeatureError> {
    let mut words: Vec<(&str, &str)> = Vec::new();
    for t in annotated.word_tokens() {
        match &t.pos {
            Some(tag) => words.push((t.lower.as_str(), tag.as_str())),
            None => return Ok(Extraction::Skipped(SkipReason::NoPosTags)),
        }
    }
    if words.is_empty() {
        return Err(FeatureError::EmptyText);
    }

    let mut warnings: Vec<String> = Vec::new();
    fn ratio(warnings: &mut Vec<String>, name: &str, num: f64, den: f64) -> f64 {
        if den > 0.0 {
            num / den
        } else {
            warnings.push(format!("{name}: degenerate denominator, reporting 0"));
            0.0
        }
    }

    let soph = |l: &str| !wordlist.is_common(l);
    let lexical = |l: &str, t: &str| token_is_lexical(l, t);
    let verb = |l: &str, t: &str| token_is_main_verb(l, t);

    let n = words.len();
    let t_all = distinct(&words, |_, _| true) as f64;
    let t_soph = distinct(&words, |l, _| soph(l)) as f64;
    let t_lex = distinct(&words, &lexical) as f64;
    let t_soph_lex = distinct(&words, |l, t| lexical(l, t) && soph(l)) as f64;
    let n_all = n as f64;
    let n_soph = count(&words, |l, _| soph(l)) as f64;
    let n_lex = count(&words, &lexical) as f64;
    let n_soph_lex = count(&words, |l, t| lexical(l, t) && soph(l)) as f64;

    let t_verb = distinct(&words, &verb) as f64;
    let t_soph_verb = distinct(&words, |l, t| verb(l, t) && soph(l)) as f64;
    let n_verb = count(&words, &verb) as f64;
    let t_noun = distinct(&words, |_, t| t.starts_with("NN")) as f64;
    let t_adj = distinct(&words, |_, t| t.starts_with("JJ")) as f64;
    let t_adv = distinct(&words, |_, t| t.starts_with("RB")) as f64;

    // NDW sampling variants share one seeded stream, consumed in slot order.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ndwz = ndw_of(&words[..n.min(NDW_SAMPLE)]) as f64;
    let ndwerz = if n <= NDW_SAMPLE {
        ndw_of(&words) as f64
    } else {
        let mut acc = 0.0;
        for _ in 0..NDW_DRAWS {
            let picks = rand::seq::index::sample(&mut rng, n, NDW_SAMPLE);
            let sample: Vec<(&str, &str)> = picks.iter().map(|i| words[i]).collect();
            acc += ndw_of(&sample) as f64;
        }
        acc / NDW_DRAWS as f64
    };
    let ndwesz = if n <= NDW_SAMPLE {
        ndw_of(&words) as f64
    } else {
        let mut acc = 0.0;
        for _ in 0..NDW_DRAWS {
            let start = rng.random_range(0..=n - NDW_SAMPLE);
            acc += ndw_of(&words[start..start + NDW_SAMPLE]) as f64;
        }
        acc / NDW_DRAWS as f64
    };

    let msttr = if n >= NDW_SAMPLE {
        let segments = n / NDW_SAMPLE;
        let sum: f64 = (0..segments)
            .map(|s| {
                let seg = &words[s * NDW_SAMPLE..(s + 1) * NDW_SAMPLE];
                ndw_of(seg) as f64 / NDW_SAMPLE as f64
            })
            .sum();
        sum / segments as f64
    } else {
        warnings.push("msttr50: fewer than 50 tokens, reporting 0".to_string());
        0.0
    };

    let logttr = if n >= 2 {
        t_all.ln() / n_all.ln()
    } else {
        warnings.push("logttr: fewer than 2 tokens, reporting 0".to_string());
        0.0
    };
    let uber = if n >= 2 && (n_all.ln() - t_all.ln()).abs() > f64::EPSILON {
        n_all.ln().powi(2) / (n_all.ln() - t_all.ln())
    } else {
        warnings.push("uber: degenerate type/token ratio, reporting 0".to_string());
        0.0
    };

    let values = vec![
        t_all,
        t_soph,
        t_lex,
        t_soph_lex,
        n_all,
        n_soph,
        n_lex,
        n_soph_lex,
        ratio(&mut warnings, "lexical_density", n_lex, n_all),
        ratio(&mut warnings, "ls1", n_soph_lex, n_lex),
        ratio(&mut warnings, "ls2", t_soph, t_all),
        ratio(&mut warnings, "vs1", t_soph_verb, t_verb),
        ratio(&mut warnings, "vs2", t_soph_verb * t_soph_verb, n_verb),
        ratio(&mut warnings, "cvs1", t_soph_verb, (2.0 * n_verb).sqrt()),
        t_all,
        ndwz,
        ndwerz,
        ndwesz,
        ratio(&mut warnings, "ttr", t_all, n_all),
        msttr,
        ratio(&mut warnings, "cttr", t_all, (2.0 * n_all).sqrt()),
        ratio(&mut warnings, "rttr", t_all, n_all.sqrt()),
        logttr,
        uber,
        ratio(&mut warnings, "lv", t_lex, n_lex),
        ratio(&mut warnings, "vv1", t_verb, n_verb),
        ratio(&mut warnings, "svv1", t_verb * t_verb, n_verb),
        ratio(&mut warnings, "cvv1", t_verb, (2.0 * n_verb).sqrt()),
        ratio(&mut warnings, "vv2", t_verb, n_lex),
        ratio(&mut warnings, "nv", t_noun, n_lex),
        ratio(&mut warnings, "adjv", t_adj, n_lex),
        ratio(&mut warnings, "advv", t_adv, n_lex),
        ratio(&mut warnings, "modv", t_adj + t_adv, n_lex),
    ];
    debug_assert_eq!(values.len(), LEXRICH_DIM);

    Ok(Extraction::Ready(BlockResult {
        block: FeatureBlock::dense(BlockName::Lexrich, values, lexrich_feature_names()),
        warnings,
    }))
}
