//! Rule-based sentence splitting.

/// Words that end with a period without terminating a sentence.
const ABBREVIATIONS: &[&str] = &[
    "dr", "mr", "mrs", "ms", "prof", "st", "jr", "sr", "vs", "etc", "e.g", "i.e", "fig", "al",
    "inc", "ltd", "co", "dept", "est", "approx", "no", "u.s", "u.k", "ph.d", "md",
];

fn is_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

/// The word immediately preceding position `end` (exclusive), stripped of
/// leading punctuation and lowercased.
fn preceding_word(chars: &[char], end: usize) -> String {
    let mut start = end;
    while start > 0 && !chars[start - 1].is_whitespace() {
        start -= 1;
    }
    let word: String = chars[start..end].iter().collect();
    word.trim_start_matches(|c: char| !c.is_alphanumeric())
        .to_lowercase()
}

/// Split text into sentences.
///
/// A boundary is a `.`, `!`, or `?` followed by whitespace and then an
/// uppercase letter or digit, unless the period ends a known abbreviation.
/// Text without any terminator is a single sentence.
pub fn split_sentences(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;

    while i < chars.len() {
        if is_terminator(chars[i]) {
            // Absorb runs of terminators ("?!", "...").
            let mut j = i;
            while j + 1 < chars.len() && is_terminator(chars[j + 1]) {
                j += 1;
            }
            let mut k = j + 1;
            let mut saw_space = false;
            while k < chars.len() && chars[k].is_whitespace() {
                saw_space = true;
                k += 1;
            }
            let next_starts_sentence =
                k < chars.len() && (chars[k].is_uppercase() || chars[k].is_ascii_digit());
            let abbreviation = chars[i] == '.'
                && i == j
                && ABBREVIATIONS.contains(&preceding_word(&chars, i).as_str());

            if saw_space && next_starts_sentence && !abbreviation {
                let sentence: String = chars[start..=j].iter().collect();
                let sentence = sentence.trim();
                if !sentence.is_empty() {
                    sentences.push(sentence.to_string());
                }
                start = k;
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }

    if start < chars.len() {
        let tail: String = chars[start..].iter().collect();
        let tail = tail.trim();
        if !tail.is_empty() {
            sentences.push(tail.to_string());
        }
    }
    sentences
}
