//! Longest (213, 231)-avoiding subsequences.
//!
//! A subsequence avoids 213 and 231 exactly when it is an increasing run and
//! a decreasing run interleaved so that both end on the same final entry
//! (every earlier entry is then a suffix minimum or a suffix maximum). The
//! longest one therefore pairs, at the best pivot `f`, a longest increasing
//! subsequence ending at `f` with a longest decreasing one ending at `f`.
//!
//! For two texts the longest common avoiding pattern is found by a memoized
//! search over value windows: the first entry of an avoiding pattern is the
//! minimum or the maximum of the pattern, so matching it in both texts
//! either raises both lower bounds or lowers both upper bounds.

use serde::Serialize;

use crate::memo::Memo;
use crate::perm::{Embedding, Permutation};
use crate::run_index::PrefixMax;

/// Longest monotone subsequences ending at each position, with back-links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotTables {
    pub lis_end: Vec<usize>,
    pub lds_end: Vec<usize>,
    lis_prev: Vec<Option<usize>>,
    lds_prev: Vec<Option<usize>>,
}

fn monotone_ends(keys: impl Iterator<Item = usize>, n: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut tree = PrefixMax::new(n);
    let mut len = Vec::with_capacity(n);
    let mut prev = Vec::with_capacity(n);
    for (pos, key) in keys.enumerate() {
        let (best, end) = tree.max_upto(key - 1);
        len.push(best as usize + 1);
        prev.push((best > 0).then_some(end as usize));
        tree.raise(key, (best + 1, pos as u32));
    }
    (len, prev)
}

impl PivotTables {
    pub fn new(text: &Permutation) -> Self {
        let n = text.len();
        let (lis_end, lis_prev) = monotone_ends(text.values().iter().map(|&v| v as usize), n);
        let (lds_end, lds_prev) =
            monotone_ends(text.values().iter().map(|&v| n + 1 - v as usize), n);
        Self {
            lis_end,
            lds_end,
            lis_prev,
            lds_prev,
        }
    }

    /// Positions of a longest increasing subsequence ending at `f`.
    pub fn increasing_to(&self, f: usize) -> Vec<usize> {
        chain(&self.lis_prev, f)
    }

    /// Positions of a longest decreasing subsequence ending at `f`.
    pub fn decreasing_to(&self, f: usize) -> Vec<usize> {
        chain(&self.lds_prev, f)
    }

    /// Pivot maximizing `lis_end[f] + lds_end[f] - 1` (leftmost on ties).
    pub fn best_pivot(&self) -> (usize, usize) {
        let mut best = (0, 0);
        for f in 0..self.lis_end.len() {
            let len = self.lis_end[f] + self.lds_end[f] - 1;
            if len > best.1 {
                best = (f, len);
            }
        }
        best
    }
}

fn chain(prev: &[Option<usize>], f: usize) -> Vec<usize> {
    let mut out = vec![f];
    let mut cur = f;
    while let Some(p) = prev[cur] {
        out.push(p);
        cur = p;
    }
    out.reverse();
    out
}

/// A longest subsequence of `text` avoiding 213 and 231.
pub fn longest_av_subsequence(text: &Permutation) -> Embedding {
    let t = PivotTables::new(text);
    let (f, len) = t.best_pivot();
    let mut idx = t.increasing_to(f);
    idx.pop();
    idx.extend(t.decreasing_to(f));
    idx.sort_unstable();
    debug_assert_eq!(idx.len(), len);
    Embedding::new(idx)
}

/// Longest common avoiding pattern of two texts, with its embeddings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonPattern {
    pub length: usize,
    pub pattern: Permutation,
    pub first: Embedding,
    pub second: Embedding,
}

struct Lcs<'a> {
    a: &'a [u32],
    b: &'a [u32],
    memo: Memo,
    steps: u64,
}

/// Value window `lo..=hi` in each text.
#[derive(Clone, Copy, Debug)]
struct Windows {
    lo_a: u32,
    hi_a: u32,
    lo_b: u32,
    hi_b: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    SkipB,
    SkipA,
    /// Matched pair becomes the pattern minimum of what remains.
    Below,
    /// Matched pair becomes the pattern maximum of what remains.
    Above,
}

impl Lcs<'_> {
    fn key(w: Windows, i: usize, j: usize) -> [usize; 6] {
        [
            w.lo_a as usize,
            w.hi_a as usize,
            w.lo_b as usize,
            w.hi_b as usize,
            i,
            j,
        ]
    }

    fn below(&self, w: Windows, i: usize, j: usize) -> Windows {
        Windows {
            lo_a: self.a[i] + 1,
            lo_b: self.b[j] + 1,
            ..w
        }
    }

    fn above(&self, w: Windows, i: usize, j: usize) -> Windows {
        Windows {
            hi_a: self.a[i] - 1,
            hi_b: self.b[j] - 1,
            ..w
        }
    }

    fn inside(&self, w: Windows, i: usize, j: usize) -> bool {
        (w.lo_a..=w.hi_a).contains(&self.a[i]) && (w.lo_b..=w.hi_b).contains(&self.b[j])
    }

    /// Longest common avoiding pattern of `a[i..]` within its window and
    /// `b[j..]` within its window.
    fn best(&mut self, w: Windows, i: usize, j: usize) -> u32 {
        if i == self.a.len() || j == self.b.len() || w.lo_a > w.hi_a || w.lo_b > w.hi_b {
            return 0;
        }
        let key = Self::key(w, i, j);
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        self.steps += 1;
        let mut res = self.best(w, i, j + 1).max(self.best(w, i + 1, j));
        if self.inside(w, i, j) {
            let lo = self.best(self.below(w, i, j), i + 1, j + 1);
            let hi = self.best(self.above(w, i, j), i + 1, j + 1);
            res = res.max(1 + lo.max(hi));
        }
        self.memo.set(&key, res);
        res
    }

    fn choose(&mut self, w: Windows, i: usize, j: usize) -> Move {
        let target = self.best(w, i, j);
        if self.best(w, i, j + 1) == target {
            return Move::SkipB;
        }
        if self.best(w, i + 1, j) == target {
            return Move::SkipA;
        }
        debug_assert!(self.inside(w, i, j));
        if 1 + self.best(self.below(w, i, j), i + 1, j + 1) == target {
            Move::Below
        } else {
            Move::Above
        }
    }
}

/// Longest common (213, 231)-avoiding pattern of two permutations.
pub fn lcs_av(a: &Permutation, b: &Permutation) -> CommonPattern {
    lcs_av_counted(a, b).0
}

/// As [`lcs_av`], also returning the number of states expanded.
pub fn lcs_av_counted(a: &Permutation, b: &Permutation) -> (CommonPattern, u64) {
    let (na, nb) = (a.len(), b.len());
    let mut s = Lcs {
        a: a.values(),
        b: b.values(),
        memo: Memo::new(vec![na + 2, na + 1, nb + 2, nb + 1, na, nb], 1 << 16),
        steps: 0,
    };
    let mut w = Windows {
        lo_a: 1,
        hi_a: na as u32,
        lo_b: 1,
        hi_b: nb as u32,
    };
    let length = s.best(w, 0, 0) as usize;
    let (mut i, mut j) = (0, 0);
    let (mut ia, mut ib) = (Vec::with_capacity(length), Vec::with_capacity(length));
    while ia.len() < length {
        match s.choose(w, i, j) {
            Move::SkipB => j += 1,
            Move::SkipA => i += 1,
            m => {
                ia.push(i);
                ib.push(j);
                w = if m == Move::Below {
                    s.below(w, i, j)
                } else {
                    s.above(w, i, j)
                };
                i += 1;
                j += 1;
            }
        }
    }
    let first = Embedding::new(ia);
    let pattern = Permutation::flatten(&first.values(a)).expect("text values are distinct");
    let steps = s.steps;
    (
        CommonPattern {
            length,
            pattern,
            first,
            second: Embedding::new(ib),
        },
        steps,
    )
}
