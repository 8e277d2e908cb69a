use serde::Serialize;

use crate::class::Letter;
use crate::perm::Permutation;

/// A maximal run of same-kind entries. `start..=end` are 0-based positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub kind: Letter,
    pub start: usize,
    pub end: usize,
}

impl Factor {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Split of a pattern into maximal ascent/descent runs.
///
/// Factors are stored left to right but addressed by label: the rightmost
/// factor (the one holding the final entry) is label 1 and the leftmost is
/// label `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorDecomposition {
    factors: Vec<Factor>,
}

impl FactorDecomposition {
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    /// Factors in left-to-right order (label `m` first).
    pub fn left_to_right(&self) -> &[Factor] {
        &self.factors
    }

    /// Factor with label `label` in `1..=m`.
    pub fn factor(&self, label: usize) -> &Factor {
        assert!(
            (1..=self.count()).contains(&label),
            "factor label {label} out of 1..={}",
            self.count()
        );
        &self.factors[self.count() - label]
    }

    /// Position of the leftmost entry of factor `label`.
    pub fn lmei(&self, label: usize) -> usize {
        self.factor(label).start
    }
}

/// Splits `p` into maximal runs of ascent or descent entries; the final
/// entry joins the run of the entry before it. A single entry is one ascent
/// factor.
pub fn factor_decompose(p: &Permutation) -> FactorDecomposition {
    let v = p.values();
    let n = v.len();
    if n == 1 {
        return FactorDecomposition {
            factors: vec![Factor {
                kind: Letter::Ascent,
                start: 0,
                end: 0,
            }],
        };
    }
    let mut factors: Vec<Factor> = Vec::new();
    for i in 0..n - 1 {
        let kind = Letter::between(v[i], v[i + 1]);
        match factors.last_mut() {
            Some(f) if f.kind == kind => f.end = i,
            _ => factors.push(Factor {
                kind,
                start: i,
                end: i,
            }),
        }
    }
    if let Some(last) = factors.last_mut() {
        last.end = n - 1;
    }
    FactorDecomposition { factors }
}
