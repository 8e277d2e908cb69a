//! The class Av(213, 231).
//!
//! A permutation avoids both 213 and 231 exactly when every entry except the
//! last is either the minimum or the maximum of the suffix it starts. An
//! entry that is a suffix minimum is followed by something larger (an ascent
//! element); a suffix maximum is followed by something smaller (a descent
//! element). Reading off that choice for each of the first `n - 1` entries
//! gives a binary word, and the map is a bijection onto all words of length
//! `n - 1`, so `|Av_n(213, 231)| = 2^(n-1)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    /// `p[i] < p[i + 1]`
    Ascent,
    /// `p[i] > p[i + 1]`
    Descent,
}

impl Letter {
    #[inline]
    pub fn between(a: u32, b: u32) -> Letter {
        if a < b {
            Letter::Ascent
        } else {
            Letter::Descent
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Ascent => 'A',
            Letter::Descent => 'D',
        }
    }
}

/// Ascent/descent word of a permutation; length `n - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct AscDescWord(Vec<Letter>);

impl AscDescWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word of length `len` whose bit `i` (LSB first) set means `Descent`.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        Self(
            (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Descent
                    } else {
                        Letter::Ascent
                    }
                })
                .collect(),
        )
    }

    /// Whether `self` occurs as a (not necessarily contiguous) subsequence of `other`.
    pub fn is_subsequence_of(&self, other: &AscDescWord) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|l| it.any(|m| m == l))
    }
}

impl fmt::Display for AscDescWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl fmt::Debug for AscDescWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AscDescWord({self})")
    }
}

impl FromStr for AscDescWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Letter::Ascent),
                'D' | 'd' => Ok(Letter::Descent),
                _ => Err(Error::Syntax(format!("unexpected letter {c:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(AscDescWord)
    }
}

pub fn ascent_descent_word(p: &Permutation) -> AscDescWord {
    AscDescWord(
        p.values()
            .windows(2)
            .map(|w| Letter::between(w[0], w[1]))
            .collect(),
    )
}

/// Every entry but the last is the maximum or the minimum of its suffix.
pub fn is_av_213_231(p: &Permutation) -> bool {
    let v = p.values();
    let n = v.len();
    let (mut lo, mut hi) = (v[n - 1], v[n - 1]);
    for &x in v[..n - 1].iter().rev() {
        if x < lo {
            lo = x;
        } else if x > hi {
            hi = x;
        } else {
            return false;
        }
    }
    true
}

/// Inverse of [`ascent_descent_word`] on the class.
///
/// Scans the word over the pool `1..=n`: an ascent takes the smallest value
/// left, a descent the largest, and the final entry gets the last value.
pub fn word_to_permutation(w: &AscDescWord) -> Permutation {
    let n = w.len() + 1;
    let (mut lo, mut hi) = (1u32, n as u32);
    let mut values = Vec::with_capacity(n);
    for l in w.letters() {
        match l {
            Letter::Ascent => {
                values.push(lo);
                lo += 1;
            }
            Letter::Descent => {
                values.push(hi);
                hi -= 1;
            }
        }
    }
    debug_assert_eq!(lo, hi);
    values.push(lo);
    Permutation::from_trusted(values)
}

/// Iterator over `Av_n(213, 231)` in word order (bit `i` of the counter is letter `i`).
#[derive(Clone, Debug)]
pub struct AvoidingPermutations {
    len: usize,
    next: u64,
    end: u64,
}

impl Iterator for AvoidingPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.next == self.end {
            return None;
        }
        let w = AscDescWord::from_bits(self.next, self.len - 1);
        self.next += 1;
        Some(word_to_permutation(&w))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AvoidingPermutations {}

/// All `2^(n-1)` members of `Av_n(213, 231)`, each exactly once.
pub fn enumerate_av(n: usize) -> Result<AvoidingPermutations> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n > 64 {
        return Err(Error::SizeGuard {
            what: "enumeration length",
            got: n,
            limit: 64,
        });
    }
    Ok(AvoidingPermutations {
        len: n,
        next: 0,
        end: 1u64 << (n - 1),
    })
}

/// Uniform random member of `Av_n(213, 231)`, deterministic in `seed`.
pub fn random_av(n: usize, seed: u64) -> Result<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_av_with(n, &mut rng)
}

pub fn random_av_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let w = AscDescWord::new(
        (0..n - 1)
            .map(|_| {
                if rng.gen::<bool>() {
                    Letter::Descent
                } else {
                    Letter::Ascent
                }
            })
            .collect(),
    );
    Ok(word_to_permutation(&w))
}
