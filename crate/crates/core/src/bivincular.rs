//! Bivincular (213, 231)-avoiding patterns.
//!
//! A bivincular pattern is a bottom-row permutation plus adjacency
//! requirements: some consecutive pattern positions must land on
//! consecutive text positions, some consecutive pattern values must land on
//! consecutive text values, and the match may be pinned to the first or last
//! text position and to the smallest or largest text value.
//!
//! Because every bottom-row entry is the minimum or maximum of its suffix,
//! the order constraints of a partial matching collapse into a value window
//! `[lb, ub]`: matching an ascent entry to `v` raises `lb` to `v + 1`,
//! matching a descent entry lowers `ub` to `v - 1`. The same window carries
//! value adjacency: when pattern value `v` sits left of `v + 1`, only descent
//! entries lie between them, so `lb` is still `match(v) + 1` when `v + 1` is
//! reached; symmetrically for `ub`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::class::{ascent_descent_word, is_av_213_231, Letter};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::perm::{parse_values, Embedding, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BivincularPattern {
    bottom: Permutation,
    /// 1-based positions `i`: entries `i` and `i + 1` land on adjacent text positions.
    pos_adjacent: BTreeSet<usize>,
    /// Pattern values `v`: values `v` and `v + 1` land on adjacent text values.
    val_adjacent: BTreeSet<u32>,
    first_anchor: bool,
    last_anchor: bool,
    min_anchor: bool,
    max_anchor: bool,
}

/// Builder-style constructor arguments for [`BivincularPattern::new`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub pos_adjacent: BTreeSet<usize>,
    pub val_adjacent: BTreeSet<u32>,
    pub first_anchor: bool,
    pub last_anchor: bool,
    pub min_anchor: bool,
    pub max_anchor: bool,
}

impl BivincularPattern {
    /// Validated pattern: the bottom row must avoid 213 and 231 and every
    /// value-adjacent pair must respect the placement rules.
    pub fn new(bottom: Permutation, c: Constraints) -> Result<Self> {
        let p = Self::general(bottom, c)?;
        if !p.in_class() {
            return Err(Error::ClassViolation(p.bottom.to_string()));
        }
        check_structure(&p.bottom, &p.val_adjacent)?;
        Ok(p)
    }

    /// Pattern over an arbitrary bottom row. Only the brute-force oracle
    /// accepts these when the row is outside the class.
    pub fn general(bottom: Permutation, c: Constraints) -> Result<Self> {
        let k = bottom.len();
        if let Some(&i) = c.pos_adjacent.iter().find(|&&i| i == 0 || i >= k) {
            return Err(Error::Syntax(format!("pos_adj entry {i} outside 1..{k}")));
        }
        if let Some(&v) = c.val_adjacent.iter().find(|&&v| v == 0 || v as usize >= k) {
            return Err(Error::Syntax(format!("val_adj entry {v} outside 1..{k}")));
        }
        Ok(Self {
            bottom,
            pos_adjacent: c.pos_adjacent,
            val_adjacent: c.val_adjacent,
            first_anchor: c.first_anchor,
            last_anchor: c.last_anchor,
            min_anchor: c.min_anchor,
            max_anchor: c.max_anchor,
        })
    }

    /// Pattern with no constraints beyond the bottom row.
    pub fn plain(bottom: Permutation) -> Result<Self> {
        Self::new(bottom, Constraints::default())
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pos_adjacent(&self) -> &BTreeSet<usize> {
        &self.pos_adjacent
    }

    pub fn val_adjacent(&self) -> &BTreeSet<u32> {
        &self.val_adjacent
    }

    pub fn first_anchor(&self) -> bool {
        self.first_anchor
    }

    pub fn last_anchor(&self) -> bool {
        self.last_anchor
    }

    pub fn min_anchor(&self) -> bool {
        self.min_anchor
    }

    pub fn max_anchor(&self) -> bool {
        self.max_anchor
    }

    /// Whether the bottom row avoids 213 and 231.
    pub fn in_class(&self) -> bool {
        is_av_213_231(&self.bottom)
    }

    pub fn is_plain(&self) -> bool {
        self.pos_adjacent.is_empty()
            && self.val_adjacent.is_empty()
            && !(self.first_anchor || self.last_anchor || self.min_anchor || self.max_anchor)
    }
}

/// Placement rules for value-adjacent pairs.
///
/// If `v` sits left of `v + 1` then `v` must be an ascent entry and every
/// entry strictly between them a descent entry; if `v + 1` sits left of `v`
/// then `v + 1` must be a descent entry with only ascent entries between.
pub(crate) fn check_structure(bottom: &Permutation, val_adjacent: &BTreeSet<u32>) -> Result<()> {
    let word = ascent_descent_word(bottom);
    let kind = |i: usize| word.letters().get(i).copied();
    let pos = bottom.positions();
    for &v in val_adjacent {
        let (p, q) = (pos[v as usize - 1], pos[v as usize]);
        let (left, right, left_kind, between) = if p < q {
            (p, q, Letter::Ascent, Letter::Descent)
        } else {
            (q, p, Letter::Descent, Letter::Ascent)
        };
        if kind(left) != Some(left_kind) {
            return Err(Error::StructureViolation(format!(
                "values {v} and {} cannot be value-adjacent: left one at position {} is not an {} entry",
                v + 1,
                left + 1,
                if left_kind == Letter::Ascent { "ascent" } else { "descent" }
            )));
        }
        if let Some(l) = (left + 1..right).find(|&l| kind(l) != Some(between)) {
            return Err(Error::StructureViolation(format!(
                "entry at position {} lies between value-adjacent {v} and {} with the wrong kind",
                l + 1,
                v + 1
            )));
        }
    }
    Ok(())
}

impl fmt::Display for BivincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bottom={}", self.bottom)?;
        if self.first_anchor {
            f.write_str("; first")?;
        }
        if self.last_anchor {
            f.write_str("; last")?;
        }
        let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(",");
        if !self.pos_adjacent.is_empty() {
            write!(
                f,
                "; pos_adj={}",
                join(&mut self.pos_adjacent.iter().map(|i| i.to_string()))
            )?;
        }
        if !self.val_adjacent.is_empty() {
            write!(
                f,
                "; val_adj={}",
                join(&mut self.val_adjacent.iter().map(|v| v.to_string()))
            )?;
        }
        if self.min_anchor {
            f.write_str("; min_anchor")?;
        }
        if self.max_anchor {
            f.write_str("; max_anchor")?;
        }
        Ok(())
    }
}

fn parse_list<T: FromStr + Ord>(key: &str, s: &str) -> Result<BTreeSet<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| Error::Syntax(format!("bad {key} entry {t:?}")))
        })
        .collect()
}

/// Splits the one-line grammar into a bottom row and its constraints.
///
/// `bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor`
fn parse_fields(s: &str) -> Result<(Permutation, Constraints)> {
    let mut bottom = None;
    let mut c = Constraints::default();
    for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
        let (key, value) = match field.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (field, None),
        };
        match (key, value) {
            ("bottom", Some(v)) => {
                let values = parse_values(v).map_err(|e| Error::Syntax(e.to_string()))?;
                bottom = Some(Permutation::new(values).map_err(|e| Error::Syntax(e.to_string()))?);
            }
            ("pos_adj", Some(v)) => c.pos_adjacent = parse_list(key, v)?,
            ("val_adj", Some(v)) => c.val_adjacent = parse_list(key, v)?,
            ("first", None) => c.first_anchor = true,
            ("last", None) => c.last_anchor = true,
            ("min_anchor", None) => c.min_anchor = true,
            ("max_anchor", None) => c.max_anchor = true,
            ("bottom" | "pos_adj" | "val_adj", None) => {
                return Err(Error::Syntax(format!("{key} needs a value")))
            }
            ("first" | "last" | "min_anchor" | "max_anchor", Some(_)) => {
                return Err(Error::Syntax(format!("{key} is a flag and takes no value")))
            }
            _ => return Err(Error::Syntax(format!("unknown field {key:?}"))),
        }
    }
    let bottom = bottom.ok_or_else(|| Error::Syntax("missing bottom=".into()))?;
    Ok((bottom, c))
}

impl FromStr for BivincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (bottom, c) = parse_fields(s)?;
        BivincularPattern::new(bottom, c)
    }
}

/// Parses and validates a pattern whose bottom row avoids 213 and 231.
pub fn parse_bivincular(s: &str) -> Result<BivincularPattern> {
    s.parse()
}

/// Parses the same grammar without the class and placement checks.
pub fn parse_bivincular_general(s: &str) -> Result<BivincularPattern> {
    let (bottom, c) = parse_fields(s)?;
    BivincularPattern::general(bottom, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gate {
    /// Must land exactly on the current lower bound.
    Lower,
    /// Must land exactly on the current upper bound.
    Upper,
    /// Must land on the smallest text value.
    Min,
    /// Must land on the largest text value.
    Max,
}

/// How a bottom-row entry updates the window after it is matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Ascent,
    Descent,
    Last,
}

struct Solver<'a> {
    text: &'a [u32],
    roles: Vec<Role>,
    gates: Vec<Vec<Gate>>,
    /// `next_adjacent[i]`: entry `i + 1` must sit right after entry `i`.
    next_adjacent: Vec<bool>,
    last_anchor: bool,
    memo: Memo,
    steps: u64,
}

impl<'a> Solver<'a> {
    fn new(p: &BivincularPattern, text: &'a Permutation) -> Self {
        let k = p.len();
        let word = ascent_descent_word(&p.bottom);
        let roles = (0..k)
            .map(|i| match word.letters().get(i) {
                Some(Letter::Ascent) => Role::Ascent,
                Some(Letter::Descent) => Role::Descent,
                None => Role::Last,
            })
            .collect();
        let pos = p.bottom.positions();
        let mut gates = vec![Vec::new(); k];
        for &v in &p.val_adjacent {
            let (pv, pw) = (pos[v as usize - 1], pos[v as usize]);
            if pv < pw {
                gates[pw].push(Gate::Lower);
            } else {
                gates[pv].push(Gate::Upper);
            }
        }
        if p.min_anchor {
            gates[pos[0]].push(Gate::Min);
        }
        if p.max_anchor {
            gates[pos[k - 1]].push(Gate::Max);
        }
        let next_adjacent = (0..k).map(|i| p.pos_adjacent.contains(&(i + 1))).collect();
        let n = text.len();
        Self {
            text: text.values(),
            roles,
            gates,
            next_adjacent,
            last_anchor: p.last_anchor,
            memo: Memo::new(vec![n + 2, n + 2, k, n], 1 << 20),
            steps: 0,
        }
    }

    fn admits(&self, lb: u32, ub: u32, i: usize, j: usize) -> bool {
        let v = self.text[j];
        let n = self.text.len() as u32;
        v >= lb
            && v <= ub
            && self.gates[i].iter().all(|g| match g {
                Gate::Lower => v == lb,
                Gate::Upper => v == ub,
                Gate::Min => v == 1,
                Gate::Max => v == n,
            })
    }

    fn window_after(&self, lb: u32, ub: u32, i: usize, j: usize) -> (u32, u32) {
        let v = self.text[j];
        match self.roles[i] {
            Role::Ascent => (v + 1, ub),
            Role::Descent => (lb, v - 1),
            Role::Last => (lb, ub),
        }
    }

    /// Candidate positions for entry `i + 1` once entry `i` sits at `j`.
    fn successors(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        if self.next_adjacent[i] {
            j + 1..(j + 2).min(self.text.len())
        } else {
            j + 1..self.text.len()
        }
    }

    /// Can `pattern[i..]` be matched starting with entry `i` at text `j`,
    /// every matched value inside `[lb, ub]`?
    fn pm(&mut self, lb: u32, ub: u32, i: usize, j: usize) -> bool {
        if !self.admits(lb, ub, i, j) {
            return false;
        }
        if i + 1 == self.roles.len() {
            return !self.last_anchor || j + 1 == self.text.len();
        }
        let key = [lb as usize, ub as usize, i, j];
        if let Some(hit) = self.memo.get(&key) {
            return hit == 1;
        }
        self.steps += 1;
        let (lb2, ub2) = self.window_after(lb, ub, i, j);
        let res = self.successors(i, j).any(|l| self.pm(lb2, ub2, i + 1, l));
        self.memo.set(&key, res as u32);
        res
    }

    fn solve(&mut self, first_anchor: bool) -> Option<Embedding> {
        let n = self.text.len();
        let k = self.roles.len();
        if k > n {
            return None;
        }
        let starts = if first_anchor { 0..1 } else { 0..n };
        let (lb, ub) = (1, n as u32);
        let j0 = starts.into_iter().find(|&j| self.pm(lb, ub, 0, j))?;
        let mut out = vec![j0];
        let (mut lb, mut ub, mut j) = (lb, ub, j0);
        for i in 0..k - 1 {
            (lb, ub) = self.window_after(lb, ub, i, j);
            j = self
                .successors(i, j)
                .find(|&l| self.pm(lb, ub, i + 1, l))
                .expect("memoized state has a successor");
            out.push(j);
        }
        Some(Embedding::new(out))
    }
}

/// Matching of a bivincular pattern in an arbitrary permutation.
///
/// Fails with [`Error::ClassViolation`] for patterns built with
/// [`BivincularPattern::general`] whose bottom row leaves the class.
pub fn matches_bivincular(
    pattern: &BivincularPattern,
    text: &Permutation,
) -> Result<Option<Embedding>> {
    matches_bivincular_counted(pattern, text).map(|r| r.0)
}

/// As [`matches_bivincular`], also returning the number of states expanded.
pub fn matches_bivincular_counted(
    pattern: &BivincularPattern,
    text: &Permutation,
) -> Result<(Option<Embedding>, u64)> {
    if !pattern.in_class() {
        return Err(Error::ClassViolation(pattern.bottom.to_string()));
    }
    let mut s = Solver::new(pattern, text);
    let e = s.solve(pattern.first_anchor);
    Ok((e, s.steps))
}
