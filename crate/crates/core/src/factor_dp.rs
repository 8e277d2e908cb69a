//! Matching a (213, 231)-avoiding pattern in an arbitrary permutation.
//!
//! The pattern is cut into its factors F(m) .. F(1). An ascent factor is an
//! increasing run whose entries sit below everything after it; a descent
//! factor is a decreasing run above everything after it. A matching of the
//! suffix starting at F(i) is therefore a bounded monotone run for F(i),
//! followed by a matching of the suffix starting at F(i-1) that lies entirely
//! above (ascent) or below (descent) that run.
//!
//! `lm(i, j)` records, over all matchings of the suffix from F(i) that start
//! at `text[j]`, the smallest achievable maximum (F(i) ascent) or the largest
//! achievable minimum (F(i) descent). That is exactly the quantity the next
//! factor to the left needs as its bound, so each row is computed from the
//! previous one with one bounded-run sweep per cell.

use crate::class::{is_av_213_231, Letter};
use crate::error::{Error, Result};
use crate::exec::{map_range, Execution};
use crate::factor::{factor_decompose, FactorDecomposition};
use crate::perm::{Embedding, Permutation};
use crate::run_index::{BoundedRunIndex, Direction};

fn direction(kind: Letter) -> Direction {
    match kind {
        Letter::Ascent => Direction::Increasing,
        Letter::Descent => Direction::Decreasing,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cell {
    value: u32,
    /// Last text position used by this factor's run.
    split: u32,
}

/// The `lm` table for one (pattern, text) pair.
#[derive(Clone, Debug)]
pub struct LmTable {
    factors: FactorDecomposition,
    /// `rows[label - 1][j]`
    rows: Vec<Vec<Option<Cell>>>,
    steps: u64,
}

impl LmTable {
    pub fn factors(&self) -> &FactorDecomposition {
        &self.factors
    }

    /// `lm(label, j)` with `label` in `1..=m` and `j` a 0-based text position.
    pub fn get(&self, label: usize, j: usize) -> Option<u32> {
        self.rows[label - 1][j].map(|c| c.value)
    }

    /// Sweep iterations spent building the table.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// First text position where a matching of the whole pattern starts.
    pub fn first_start(&self) -> Option<usize> {
        self.rows
            .last()
            .and_then(|row| row.iter().position(Option::is_some))
    }

    /// Rebuilds a concrete matching from the recorded split points.
    pub fn embedding(&self, text: &Permutation) -> Option<Embedding> {
        let mut j = self.first_start()?;
        let mut out = Vec::new();
        for label in (1..=self.factors.count()).rev() {
            let f = self.factors.factor(label);
            let cell = self.rows[label - 1][j].expect("backtrack through empty cell");
            let split = cell.split as usize;
            let bound = if label == 1 {
                match f.kind {
                    Letter::Ascent => text.value(split) + 1,
                    Letter::Descent => text.value(split) - 1,
                }
            } else {
                self.rows[label - 2][split + 1]
                    .expect("split points at empty cell")
                    .value
            };
            let mut idx = BoundedRunIndex::new(text, j, direction(f.kind)).ok()?;
            idx.extend_to(split);
            out.extend(idx.witness(bound, f.len())?);
            j = split + 1;
        }
        Some(Embedding::new(out))
    }
}

pub fn build_lm_table(pattern: &Permutation, text: &Permutation) -> Result<LmTable> {
    build_lm_table_with(pattern, text, Execution::Sequential)
}

/// Builds the table row by row; cells within a row are independent and may
/// be computed in parallel.
pub fn build_lm_table_with(
    pattern: &Permutation,
    text: &Permutation,
    exec: Execution,
) -> Result<LmTable> {
    if !is_av_213_231(pattern) {
        return Err(Error::InvalidClass { what: "pattern" });
    }
    let factors = factor_decompose(pattern);
    assert!(
        factors
            .left_to_right()
            .windows(2)
            .all(|w| w[0].kind != w[1].kind),
        "factor kinds must alternate"
    );
    let n = text.len();
    let mut rows: Vec<Vec<Option<Cell>>> = Vec::with_capacity(factors.count());
    let mut steps = 0u64;
    for label in 1..=factors.count() {
        let f = *factors.factor(label);
        let prev = rows.last();
        let row: Vec<(Option<Cell>, u64)> = map_range(exec, n, |j| match prev {
            None => base_cell(text, j, f.kind, f.len()),
            Some(prev) => step_cell(text, j, f.kind, f.len(), prev),
        });
        steps += row.iter().map(|r| r.1).sum::<u64>();
        rows.push(row.into_iter().map(|r| r.0).collect());
    }
    Ok(LmTable {
        factors,
        rows,
        steps,
    })
}

/// Rightmost factor: the run itself is the whole matching, so its extreme
/// is the last entry and the bound is that entry's value.
fn base_cell(text: &Permutation, j: usize, kind: Letter, size: usize) -> (Option<Cell>, u64) {
    let mut idx = BoundedRunIndex::new(text, j, direction(kind)).expect("j in range");
    let mut best: Option<Cell> = None;
    let mut steps = 0;
    for split in j..text.len() {
        steps += 1;
        idx.extend_to(split);
        let v = text.value(split);
        let (bound, better) = match kind {
            Letter::Ascent => (v + 1, best.is_none_or(|b| v < b.value)),
            Letter::Descent => (v - 1, best.is_none_or(|b| v > b.value)),
        };
        if better && idx.query(bound) >= size {
            best = Some(Cell {
                value: v,
                split: split as u32,
            });
        }
    }
    (best, steps)
}

/// Factor with a successor: the run occupies `text[j..=split]` and the rest
/// of the pattern starts at `split + 1`, whose first entry is the extreme of
/// the combined matching.
fn step_cell(
    text: &Permutation,
    j: usize,
    kind: Letter,
    size: usize,
    prev: &[Option<Cell>],
) -> (Option<Cell>, u64) {
    let mut idx = BoundedRunIndex::new(text, j, direction(kind)).expect("j in range");
    let mut best: Option<Cell> = None;
    let mut steps = 0;
    for split in j..text.len().saturating_sub(1) {
        steps += 1;
        let Some(rest) = prev[split + 1] else {
            continue;
        };
        let v = text.value(split + 1);
        let better = match kind {
            Letter::Ascent => best.is_none_or(|b| v < b.value),
            Letter::Descent => best.is_none_or(|b| v > b.value),
        };
        if !better {
            continue;
        }
        idx.extend_to(split);
        if idx.query(rest.value) >= size {
            best = Some(Cell {
                value: v,
                split: split as u32,
            });
        }
    }
    (best, steps)
}

/// Matching of an avoiding `pattern` in an arbitrary `text`.
pub fn matches_pattern_avoiding(
    pattern: &Permutation,
    text: &Permutation,
) -> Result<Option<Embedding>> {
    matches_pattern_avoiding_with(pattern, text, Execution::Sequential)
}

pub fn matches_pattern_avoiding_with(
    pattern: &Permutation,
    text: &Permutation,
    exec: Execution,
) -> Result<Option<Embedding>> {
    let table = build_lm_table_with(pattern, text, exec)?;
    Ok(table.embedding(text))
}
