//! Whitespace tokenization with punctuation detachment and contraction
//! splitting.

/// Clitic suffixes detached from their host word, checked longest-first.
const CLITICS: &[&str] = &["n't", "'re", "'ve", "'ll", "'s", "'d", "'m"];

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Normalize curly apostrophes for clitic matching only; surfaces keep the
/// original characters.
fn matches_clitic(chunk: &str, clitic: &str) -> bool {
    let chunk_chars: Vec<char> = chunk.chars().collect();
    let clitic_chars: Vec<char> = clitic.chars().collect();
    if chunk_chars.len() < clitic_chars.len() {
        return false;
    }
    let tail = &chunk_chars[chunk_chars.len() - clitic_chars.len()..];
    tail.iter().zip(clitic_chars.iter()).all(|(a, b)| {
        if *b == '\'' {
            is_apostrophe(*a)
        } else {
            a.eq_ignore_ascii_case(b)
        }
    })
}

fn split_clitic(chunk: &str) -> Option<(String, String)> {
    for clitic in CLITICS {
        if matches_clitic(chunk, clitic) {
            let n: usize = chunk.chars().count();
            let cut = n - clitic.chars().count();
            if cut == 0 {
                continue;
            }
            let stem: String = chunk.chars().take(cut).collect();
            let suffix: String = chunk.chars().skip(cut).collect();
            // "n't" needs a real verb stem; bare apostrophe stems stay whole.
            if stem.chars().any(|c| c.is_alphanumeric()) {
                return Some((stem, suffix));
            }
        }
    }
    None
}

/// Tokenize one sentence.
///
/// Splits on whitespace, detaches leading and trailing punctuation as
/// separate tokens, and splits standard English contractions
/// (`don't` -> `do`, `n't`).
pub fn tokenize(sentence: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for chunk in sentence.split_whitespace() {
        let chars: Vec<char> = chunk.chars().collect();
        let mut lo = 0usize;
        let mut hi = chars.len();
        while lo < hi && !chars[lo].is_alphanumeric() {
            lo += 1;
        }
        while hi > lo && !chars[hi - 1].is_alphanumeric() {
            hi -= 1;
        }
        // Keep trailing apostrophes that belong to a clitic ("nurses'" stays
        // split-free but "it's." must keep 's attached before the dot).
        while hi < chars.len() && is_apostrophe(chars[hi]) && hi > lo {
            break;
        }

        for &c in &chars[..lo] {
            tokens.push(c.to_string());
        }
        if lo < hi {
            let core: String = chars[lo..hi].iter().collect();
            match split_clitic(&core) {
                Some((stem, suffix)) => {
                    tokens.push(stem);
                    tokens.push(suffix);
                }
                None => tokens.push(core),
            }
        }
        for &c in &chars[hi..] {
            tokens.push(c.to_string());
        }
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        tokenize(s)
    }

    #[test]
    fn plain_words() {
        assert_eq!(toks("prostate cancer screening"), ["prostate", "cancer", "screening"]);
    }

    #[test]
    fn contraction_and_terminal_punctuation() {
        assert_eq!(toks("It's amazing."), ["It", "'s", "amazing", "."]);
        assert_eq!(toks("don't"), ["do", "n't"]);
        assert_eq!(toks("we'll can't I'm"), ["we", "'ll", "ca", "n't", "I", "'m"]);
    }

    #[test]
    fn empty_input() {
        assert!(toks("").is_empty());
        assert!(toks("   ").is_empty());
    }

    #[test]
    fn leading_and_trailing_punctuation() {
        assert_eq!(toks("(test)."), ["(", "test", ")", "."]);
        assert_eq!(toks("\"quoted\""), ["\"", "quoted", "\""]);
    }

    #[test]
    fn pure_punctuation_chunk() {
        assert_eq!(toks("- --"), ["-", "-", "-"]);
    }

    #[test]
    fn hyphenated_words_stay_whole() {
        assert_eq!(toks("self-exam works"), ["self-exam", "works"]);
    }

    #[test]
    fn curly_apostrophe() {
        assert_eq!(toks("it\u{2019}s"), ["it", "\u{2019}s"]);
    }
}
