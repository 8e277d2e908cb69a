//! Bounded longest increasing / decreasing runs anchored at a start position.
//!
//! A [`BoundedRunIndex`] anchored at `j` is swept left to right over the
//! text. After extending through `j2` it answers, for any bound, the length
//! of the longest increasing subsequence of `text[j..=j2]` that starts at
//! `text[j]` and stays strictly below the bound (or, for the decreasing
//! direction, strictly above it). Runs are kept in a prefix-maximum Fenwick
//! tree keyed by value, so each extension and each query is `O(log n)`.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Best run ending somewhere at or below a key: `(length, end position)`.
pub(crate) type Entry = (u32, u32);

/// Fenwick tree over keys `1..=n` answering prefix maxima.
#[derive(Clone, Debug)]
pub(crate) struct PrefixMax {
    tree: Vec<Entry>,
}

impl PrefixMax {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            tree: vec![(0, 0); n + 1],
        }
    }

    pub(crate) fn raise(&mut self, key: usize, e: Entry) {
        let mut i = key;
        while i < self.tree.len() {
            if self.tree[i].0 < e.0 {
                self.tree[i] = e;
            }
            i += i & i.wrapping_neg();
        }
    }

    /// Maximum over keys `1..=key`.
    pub(crate) fn max_upto(&self, key: usize) -> Entry {
        let mut i = key.min(self.tree.len() - 1);
        let mut best = (0, 0);
        while i > 0 {
            if self.tree[i].0 > best.0 {
                best = self.tree[i];
            }
            i &= i - 1;
        }
        best
    }
}

#[derive(Clone, Debug)]
pub struct BoundedRunIndex<'a> {
    text: &'a Permutation,
    dir: Direction,
    start: usize,
    /// Position most recently incorporated.
    reach: usize,
    runs: PrefixMax,
    /// Predecessor on the best run ending at each position (relative to `start`).
    parent: Vec<u32>,
}

impl<'a> BoundedRunIndex<'a> {
    /// Index anchored at `start`, already extended through `start` itself.
    pub fn new(text: &'a Permutation, start: usize, dir: Direction) -> Result<Self> {
        if start >= text.len() {
            return Err(Error::IndexOutOfRange {
                index: start,
                len: text.len(),
            });
        }
        let mut idx = Self {
            text,
            dir,
            start,
            reach: start,
            runs: PrefixMax::new(text.len()),
            parent: vec![u32::MAX; text.len() - start],
        };
        let key = idx.key(text.value(start));
        idx.runs.raise(key, (1, start as u32));
        Ok(idx)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn reach(&self) -> usize {
        self.reach
    }

    /// Value mapped so that the run always increases in key order.
    #[inline]
    fn key(&self, v: u32) -> usize {
        match self.dir {
            Direction::Increasing => v as usize,
            Direction::Decreasing => self.text.len() + 1 - v as usize,
        }
    }

    /// Largest key strictly inside the bound.
    #[inline]
    fn key_limit(&self, bound: u32) -> usize {
        let n = self.text.len() as i64;
        let lim = match self.dir {
            Direction::Increasing => bound as i64 - 1,
            Direction::Decreasing => n - bound as i64,
        };
        lim.clamp(0, n) as usize
    }

    /// Incorporates every position up to and including `to`.
    pub fn extend_to(&mut self, to: usize) {
        assert!(to < self.text.len(), "extend past end of text");
        while self.reach < to {
            self.reach += 1;
            self.push(self.reach);
        }
    }

    #[inline]
    fn push(&mut self, pos: usize) {
        let key = self.key(self.text.value(pos));
        if key <= self.key(self.text.value(self.start)) {
            return;
        }
        let (len, end) = self.runs.max_upto(key - 1);
        if len > 0 {
            self.parent[pos - self.start] = end;
            self.runs.raise(key, (len + 1, pos as u32));
        }
    }

    /// Length of the longest run from `text[start]` within the bound; 0 if
    /// `text[start]` itself falls outside.
    #[inline]
    pub fn query(&self, bound: u32) -> usize {
        self.runs.max_upto(self.key_limit(bound)).0 as usize
    }

    /// Positions of the first `len` entries of a longest run within `bound`.
    pub fn witness(&self, bound: u32, len: usize) -> Option<Vec<usize>> {
        let (best, mut end) = self.runs.max_upto(self.key_limit(bound));
        if (best as usize) < len || len == 0 {
            return None;
        }
        let mut chain = Vec::with_capacity(best as usize);
        loop {
            chain.push(end as usize);
            if end as usize == self.start {
                break;
            }
            end = self.parent[end as usize - self.start];
        }
        chain.reverse();
        chain.truncate(len);
        Some(chain)
    }
}

fn check_range(text: &Permutation, j: usize, j2: usize) -> Result<()> {
    let len = text.len();
    if j2 >= len {
        return Err(Error::IndexOutOfRange { index: j2, len });
    }
    if j > j2 {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: j2 + 1,
        });
    }
    Ok(())
}

/// Longest increasing subsequence of `text[j..=j2]` starting at `text[j]`
/// with every entry `< bound`.
pub fn bounded_lis(text: &Permutation, j: usize, j2: usize, bound: u32) -> Result<usize> {
    check_range(text, j, j2)?;
    let mut idx = BoundedRunIndex::new(text, j, Direction::Increasing)?;
    idx.extend_to(j2);
    Ok(idx.query(bound))
}

/// Longest decreasing subsequence of `text[j..=j2]` starting at `text[j]`
/// with every entry `> bound`.
pub fn bounded_lds(text: &Permutation, j: usize, j2: usize, bound: u32) -> Result<usize> {
    check_range(text, j, j2)?;
    let mut idx = BoundedRunIndex::new(text, j, Direction::Decreasing)?;
    idx.extend_to(j2);
    Ok(idx.query(bound))
}
