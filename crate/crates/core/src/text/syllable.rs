//! Heuristic syllable counting.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot count syllables: `{0}` contains no letters")]
pub struct NoLetters(pub String);

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

/// Count syllables of a word as maximal vowel groups (a, e, i, o, u, y),
/// subtracting a silent final `e` unless the word ends in consonant + `le`,
/// floored at one.
pub fn count_syllables(word: &str) -> Result<usize, NoLetters> {
    let letters: Vec<char> = word
        .chars()
        .flat_map(|c| c.to_lowercase())
        .filter(|c| c.is_alphabetic())
        .collect();
    if letters.is_empty() {
        return Err(NoLetters(word.to_string()));
    }

    let mut groups = 0usize;
    let mut in_group = false;
    for &c in &letters {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
                in_group = true;
            }
        } else {
            in_group = false;
        }
    }

    let n = letters.len();
    let silent_e = n >= 2
        && letters[n - 1] == 'e'
        && !is_vowel(letters[n - 2])
        && !(n >= 3 && letters[n - 1] == 'e' && letters[n - 2] == 'l' && !is_vowel(letters[n - 3]));
    if silent_e && groups > 1 {
        groups -= 1;
    }

    Ok(groups.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syl(w: &str) -> usize {
        count_syllables(w).unwrap()
    }

    #[test]
    fn floor_at_one() {
        assert_eq!(syl("a"), 1);
        assert_eq!(syl("the"), 1);
    }

    #[test]
    fn vowel_groups() {
        // ca-ncer: groups "a", "e"
        assert_eq!(syl("cancer"), 2);
        // groups "o", "a", "e"; trailing silent e subtracted
        assert_eq!(syl("prostate"), 2);
        assert_eq!(syl("screening"), 2);
        // d-ia-gn-o-s-i-s: groups "ia", "o", "i"
        assert_eq!(syl("diagnosis"), 3);
    }

    #[test]
    fn consonant_le_keeps_final_group() {
        assert_eq!(syl("simple"), 2);
        assert_eq!(syl("miracle"), 3);
    }

    #[test]
    fn case_insensitive_and_ignores_punctuation() {
        assert_eq!(syl("Cancer"), syl("cancer"));
        assert_eq!(syl("don't"), syl("dont"));
    }

    #[test]
    fn rejects_letterless_input() {
        assert!(count_syllables(".").is_err());
        assert!(count_syllables("123").is_err());
    }
}
