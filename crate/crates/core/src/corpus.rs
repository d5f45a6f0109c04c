//! Manifest-driven corpus loading, validation, and summary statistics.
//!
//! A corpus is described by a line-delimited manifest: one JSON object per
//! line, referencing the transcript (and optional sidecar files) by path.
//! Records are fully validated at load time; labels are derived from the
//! 1-5 misinformation score.

use std::collections::HashSet;
use std::fmt;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Binary video label derived from the 1-5 misinformation score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Trustworthy,
    Misinformative,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Trustworthy => write!(f, "trustworthy"),
            Label::Misinformative => write!(f, "misinformative"),
        }
    }
}

/// Registry of valid video category codes.
pub const CATEGORY_CODES: std::ops::RangeInclusive<u32> = 1..=32;

/// Viewer-engagement metadata attached to a video record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EngagementMeta {
    pub view_count: u64,
    pub publish_date: NaiveDate,
    pub query_date: NaiveDate,
    /// `None` means comments are disabled, which is distinct from zero comments.
    pub comment_count: Option<u64>,
    pub thumbs_up: u64,
    pub thumbs_down: u64,
    pub duration_s: f64,
    pub category_id: u32,
}

/// One video: transcript, optional sidecars, engagement metadata, and label.
#[derive(Debug, Clone)]
pub struct VideoRecord {
    pub id: String,
    pub transcript: String,
    /// One bracketed constituency tree per sentence, when a parse sidecar exists.
    pub parse_trees: Option<Vec<String>>,
    /// One line of `token_POS` pairs per sentence, when a POS sidecar exists.
    pub pos_lines: Option<Vec<String>>,
    /// Path to 16 kHz mono PCM audio, when present.
    pub audio_path: Option<PathBuf>,
    pub engagement: EngagementMeta,
    pub score: u8,
    pub label: Label,
}

/// Corpus-level summary counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusStats {
    pub n_records: usize,
    pub n_trustworthy: usize,
    pub n_misinformative: usize,
    pub mean_duration_trustworthy_s: f64,
    pub mean_duration_misinformative_s: f64,
    pub total_words: usize,
    pub mean_words_per_transcript: f64,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("empty manifest: {0}")]
    EmptyManifest(PathBuf),
    #[error("malformed line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("missing required field `{field}` at line {line}")]
    MissingField { line: usize, field: &'static str },
    #[error("score out of range at line {line}: got {score}, expected 1-5")]
    ScoreOutOfRange { line: usize, score: i64 },
    #[error("duplicate id `{id}` at line {line}")]
    DuplicateId { id: String, line: usize },
    #[error("invalid record `{id}` at line {line}: {reason}")]
    InvalidRecord {
        id: String,
        line: usize,
        reason: String,
    },
    #[error("empty corpus")]
    EmptyCorpus,
}

/// Derive the binary label from a 1-5 misinformation score.
///
/// A score of 1 is trustworthy; 2-5 are misinformative.
pub fn binarize_label(score: i64) -> Result<Label, CorpusError> {
    match score {
        1 => Ok(Label::Trustworthy),
        2..=5 => Ok(Label::Misinformative),
        other => Err(CorpusError::ScoreOutOfRange {
            line: 0,
            score: other,
        }),
    }
}

/// Raw manifest line as it appears on disk. Paths are relative to the
/// manifest's own directory.
#[derive(Debug, Deserialize)]
struct ManifestLine {
    id: Option<String>,
    transcript_path: Option<String>,
    score: Option<i64>,
    views: Option<u64>,
    publish_date: Option<String>,
    query_date: Option<String>,
    thumbs_up: Option<u64>,
    thumbs_down: Option<u64>,
    duration_s: Option<f64>,
    category_id: Option<u32>,
    audio_path: Option<String>,
    parse_path: Option<String>,
    pos_path: Option<String>,
    comment_count: Option<u64>,
}

macro_rules! require {
    ($opt:expr, $line:expr, $name:literal) => {
        $opt.ok_or(CorpusError::MissingField {
            line: $line,
            field: $name,
        })?
    };
}

fn read_to_string(path: &Path) -> Result<String, CorpusError> {
    std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_date(s: &str, line: usize, field: &str) -> Result<NaiveDate, CorpusError> {
    NaiveDate::parse_from_str(s, "%Y-%m-%d").map_err(|e| CorpusError::MalformedLine {
        line,
        reason: format!("field `{field}`: invalid ISO-8601 date `{s}`: {e}"),
    })
}

fn read_sidecar_lines(path: &Path) -> Result<Vec<String>, CorpusError> {
    Ok(read_to_string(path)?
        .lines()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect())
}

fn parse_line(
    base: &Path,
    line_no: usize,
    raw: &str,
) -> Result<VideoRecord, CorpusError> {
    let parsed: ManifestLine =
        serde_json::from_str(raw).map_err(|e| CorpusError::MalformedLine {
            line: line_no,
            reason: e.to_string(),
        })?;

    let id = require!(parsed.id, line_no, "id");
    let transcript_path = require!(parsed.transcript_path, line_no, "transcript_path");
    let score = require!(parsed.score, line_no, "score");
    let views = require!(parsed.views, line_no, "views");
    let publish_date = require!(parsed.publish_date, line_no, "publish_date");
    let query_date = require!(parsed.query_date, line_no, "query_date");
    let thumbs_up = require!(parsed.thumbs_up, line_no, "thumbs_up");
    let thumbs_down = require!(parsed.thumbs_down, line_no, "thumbs_down");
    let duration_s = require!(parsed.duration_s, line_no, "duration_s");
    let category_id = require!(parsed.category_id, line_no, "category_id");

    if !(1..=5).contains(&score) {
        return Err(CorpusError::ScoreOutOfRange {
            line: line_no,
            score,
        });
    }
    let label = match score {
        1 => Label::Trustworthy,
        _ => Label::Misinformative,
    };

    let publish_date = parse_date(&publish_date, line_no, "publish_date")?;
    let query_date = parse_date(&query_date, line_no, "query_date")?;

    let invalid = |reason: String| CorpusError::InvalidRecord {
        id: id.clone(),
        line: line_no,
        reason,
    };

    if query_date < publish_date {
        return Err(invalid(format!(
            "query_date {query_date} precedes publish_date {publish_date}"
        )));
    }
    if !(duration_s > 0.0) {
        return Err(invalid(format!("duration_s must be positive, got {duration_s}")));
    }
    if !CATEGORY_CODES.contains(&category_id) {
        return Err(invalid(format!(
            "category_id {category_id} outside registry {}-{}",
            CATEGORY_CODES.start(),
            CATEGORY_CODES.end()
        )));
    }

    let transcript = read_to_string(&base.join(&transcript_path))?;
    if transcript.trim().is_empty() {
        return Err(invalid(format!("transcript `{transcript_path}` is empty")));
    }

    let parse_trees = parsed
        .parse_path
        .map(|p| read_sidecar_lines(&base.join(p)))
        .transpose()?;
    let pos_lines = parsed
        .pos_path
        .map(|p| read_sidecar_lines(&base.join(p)))
        .transpose()?;

    let audio_path = match parsed.audio_path {
        Some(p) => {
            let full = base.join(&p);
            if !full.is_file() {
                return Err(invalid(format!("audio file `{p}` does not exist")));
            }
            Some(full)
        }
        None => None,
    };

    Ok(VideoRecord {
        id,
        transcript,
        parse_trees,
        pos_lines,
        audio_path,
        engagement: EngagementMeta {
            view_count: views,
            publish_date,
            query_date,
            comment_count: parsed.comment_count,
            thumbs_up,
            thumbs_down,
            duration_s,
            category_id,
        },
        score: score as u8,
        label,
    })
}

/// Load and validate a manifest, failing on the first invalid record.
///
/// Record order matches manifest line order; ids must be unique.
pub fn load_manifest(path: &Path) -> Result<Vec<VideoRecord>, CorpusError> {
    let (records, mut errors) = load_manifest_lenient(path)?;
    if let Some(err) = errors.drain(..).next() {
        return Err(err);
    }
    Ok(records)
}

/// Load a manifest, collecting every per-line error instead of stopping at
/// the first. Used by the `ingest` command to report all invalid records.
pub fn load_manifest_lenient(
    path: &Path,
) -> Result<(Vec<VideoRecord>, Vec<CorpusError>), CorpusError> {
    let content = read_to_string(path)?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();

    let mut records = Vec::new();
    let mut errors = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut any_line = false;

    for (idx, raw) in content.lines().enumerate() {
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        any_line = true;
        let line_no = idx + 1;
        match parse_line(&base, line_no, raw) {
            Ok(rec) => {
                if !seen.insert(rec.id.clone()) {
                    errors.push(CorpusError::DuplicateId {
                        id: rec.id.clone(),
                        line: line_no,
                    });
                } else {
                    records.push(rec);
                }
            }
            Err(e) => errors.push(e),
        }
    }

    if !any_line {
        return Err(CorpusError::EmptyManifest(path.to_path_buf()));
    }
    Ok((records, errors))
}

fn word_count(text: &str) -> usize {
    crate::text::annotate(text).word_tokens().count()
}

/// Summarize a loaded corpus: class counts, per-class mean duration, and
/// transcript word statistics.
pub fn corpus_stats(records: &[VideoRecord]) -> Result<CorpusStats, CorpusError> {
    if records.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    let mut n_trust = 0usize;
    let mut n_mis = 0usize;
    let mut dur_trust = 0.0;
    let mut dur_mis = 0.0;
    let mut total_words = 0usize;
    for r in records {
        match r.label {
            Label::Trustworthy => {
                n_trust += 1;
                dur_trust += r.engagement.duration_s;
            }
            Label::Misinformative => {
                n_mis += 1;
                dur_mis += r.engagement.duration_s;
            }
        }
        total_words += word_count(&r.transcript);
    }
    Ok(CorpusStats {
        n_records: records.len(),
        n_trustworthy: n_trust,
        n_misinformative: n_mis,
        mean_duration_trustworthy_s: if n_trust > 0 {
            dur_trust / n_trust as f64
        } else {
            0.0
        },
        mean_duration_misinformative_s: if n_mis > 0 {
            dur_mis / n_mis as f64
        } else {
            0.0
        },
        total_words,
        mean_words_per_transcript: total_words as f64 / records.len() as f64,
    })
}
