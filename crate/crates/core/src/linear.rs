//! Linear-time matching when both pattern and text avoid 213 and 231.
//!
//! In that case the pattern occurs in the text exactly when the pattern's
//! ascent/descent word is a subsequence of the text's word. The text's word
//! is produced one letter per incoming element, so the matcher runs online:
//! a letter is only known once the following element arrives, and the
//! greedy leftmost subsequence match consumes it immediately.

use crate::class::{ascent_descent_word, is_av_213_231, Letter};
use crate::error::{Error, Result};
use crate::perm::{Embedding, Permutation};

/// Online matcher fed one text value at a time.
#[derive(Clone, Debug)]
pub struct OnlineMatcher {
    word: Vec<Letter>,
    matched: Vec<usize>,
    prev: Option<u32>,
    seen: usize,
    steps: u64,
}

impl OnlineMatcher {
    /// `pattern` is expected to avoid 213 and 231; only its word is kept.
    pub fn new(pattern: &Permutation) -> Self {
        let word = ascent_descent_word(pattern).letters().to_vec();
        Self {
            matched: Vec::with_capacity(word.len()),
            word,
            prev: None,
            seen: 0,
            steps: 0,
        }
    }

    /// Feeds the next text value. Returns true once a matching is known.
    pub fn push(&mut self, value: u32) -> bool {
        self.steps += 1;
        if let Some(prev) = self.prev {
            let pos = self.seen - 1;
            if self.matched.len() < self.word.len()
                && Letter::between(prev, value) == self.word[self.matched.len()]
            {
                self.matched.push(pos);
            }
        }
        self.prev = Some(value);
        self.seen += 1;
        self.is_matched()
    }

    /// Every pattern letter has been placed and some text element follows the last one.
    pub fn is_matched(&self) -> bool {
        self.matched.len() == self.word.len()
            && self.seen > self.matched.last().map_or(0, |&p| p + 1)
    }

    pub fn embedding(&self) -> Option<Embedding> {
        if !self.is_matched() {
            return None;
        }
        let mut idx = self.matched.clone();
        idx.push(self.matched.last().map_or(0, |&p| p + 1));
        Some(Embedding::new(idx))
    }

    /// Elementary steps performed so far (one per pushed element).
    pub fn steps(&self) -> u64 {
        self.steps
    }
}

/// Matching of `pattern` in `text`, both required to avoid 213 and 231.
pub fn matches_both_avoiding(
    pattern: &Permutation,
    text: &Permutation,
) -> Result<Option<Embedding>> {
    matches_both_avoiding_counted(pattern, text).map(|(e, _)| e)
}

/// As [`matches_both_avoiding`], also reporting the matcher's step count.
pub fn matches_both_avoiding_counted(
    pattern: &Permutation,
    text: &Permutation,
) -> Result<(Option<Embedding>, u64)> {
    if !is_av_213_231(pattern) {
        return Err(Error::InvalidClass { what: "pattern" });
    }
    if !is_av_213_231(text) {
        return Err(Error::InvalidClass { what: "text" });
    }
    let mut m = OnlineMatcher::new(pattern);
    for &v in text.values() {
        if m.push(v) {
            break;
        }
    }
    Ok((m.embedding(), m.steps()))
}
