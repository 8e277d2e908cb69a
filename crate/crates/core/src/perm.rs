//! Permutations of `1..=n` and embeddings of one permutation into another.
//!
//! Positions are 0-based throughout the library. Values keep their natural
//! range `1..=n`, so `p.value(0)` is the first entry of the one-line
//! notation. Human-facing output (the CLI, `Embedding::one_based`) switches
//! to 1-based positions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, `n >= 1`, in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates `values` as a permutation of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::OutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::Duplicate(v));
            }
        }
        Ok(Self { values })
    }

    /// Replaces each entry by its rank, turning any sequence of distinct
    /// integers into the permutation with the same relative order.
    ///
    /// `[3, 2, 1, 7, 8, 4, 5]` flattens to `3 2 1 6 7 4 5`.
    pub fn flatten(raw: &[u32]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_unstable_by_key(|&i| raw[i]);
        if let Some(w) = order.windows(2).find(|w| raw[w[0]] == raw[w[1]]) {
            return Err(Error::Duplicate(raw[w[0]]));
        }
        let mut values = vec![0u32; raw.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(Self {
            values: (1..=n as u32).collect(),
        })
    }

    /// Unchecked constructor for values already known to form a permutation.
    pub(crate) fn from_trusted(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Self { values }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; a permutation has at least one element.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value at 0-based position `i`.
    #[inline]
    pub fn value(&self, i: usize) -> u32 {
        self.values[i]
    }

    /// 0-based position of every value: `positions()[v - 1]` is where `v` sits.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v as usize - 1] = i;
        }
        pos
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_values(s)?)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl TryFrom<&[u32]> for Permutation {
    type Error = Error;

    fn try_from(values: &[u32]) -> Result<Self> {
        Permutation::new(values.to_vec())
    }
}

/// Splits a whitespace-separated list of positive integers.
pub fn parse_values(s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| Error::BadToken {
                token: tok.to_string(),
            })
        })
        .collect()
}

/// True when `a` and `b` have the same length and the same relative order.
pub fn order_isomorphic(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Strictly increasing 0-based positions into a text, witnessing a matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    indices: Vec<usize>,
}

impl Embedding {
    pub fn new(indices: Vec<usize>) -> Self {
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    /// Text values picked out by the embedding.
    pub fn values(&self, text: &Permutation) -> Vec<u32> {
        self.indices.iter().map(|&i| text.value(i)).collect()
    }

    /// Checks the embedding is a genuine matching of `pattern` in `text`.
    pub fn witnesses(&self, pattern: &Permutation, text: &Permutation) -> bool {
        self.indices.len() == pattern.len()
            && self.indices.windows(2).all(|w| w[0] < w[1])
            && self.indices.last().is_none_or(|&i| i < text.len())
            && order_isomorphic(pattern.values(), &self.values(text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_nine_element_text() {
        let p = Permutation::new(vec![3, 9, 1, 8, 6, 7, 4, 5, 2]).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.to_string(), "3 9 1 8 6 7 4 5 2");
    }

    #[test]
    fn singleton() {
        assert_eq!(Permutation::new(vec![1]).unwrap().len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Permutation::new(vec![1, 1]), Err(Error::Duplicate(1)));
        assert_eq!(Permutation::new(vec![]), Err(Error::Empty));
        assert_eq!(
            Permutation::new(vec![1, 3]),
            Err(Error::OutOfRange { value: 3, n: 2 })
        );
        assert_eq!(
            Permutation::new(vec![0, 1]),
            Err(Error::OutOfRange { value: 0, n: 2 })
        );
        assert!(matches!(
            "1 x 2".parse::<Permutation>(),
            Err(Error::BadToken { .. })
        ));
        // gap: 3 2 1 7 8 4 5 skips 6
        assert!("3 2 1 7 8 4 5".parse::<Permutation>().is_err());
    }

    #[test]
    fn flatten_closes_gaps() {
        let p = Permutation::flatten(&[3, 2, 1, 7, 8, 4, 5]).unwrap();
        assert_eq!(p.values(), &[3, 2, 1, 6, 7, 4, 5]);
        assert_eq!(Permutation::flatten(&[5, 5]), Err(Error::Duplicate(5)));
    }

    #[test]
    fn positions_inverse() {
        let p: Permutation = "2 4 1 3".parse().unwrap();
        assert_eq!(p.positions(), vec![2, 0, 3, 1]);
    }

    #[test]
    fn embedding_check() {
        let text: Permutation = "5 3 4 1 2".parse().unwrap();
        let pat: Permutation = "4 3 1 2".parse().unwrap();
        assert!(Embedding::new(vec![0, 1, 3, 4]).witnesses(&pat, &text));
        assert!(!Embedding::new(vec![0, 1, 2, 4]).witnesses(&pat, &text));
        assert!(!Embedding::new(vec![1, 0, 3, 4]).witnesses(&pat, &text));
    }
}
