//! Brute-force reference solvers.
//!
//! Everything here works straight from the definitions by enumerating
//! subsequences or partial matchings. None of it calls the fast solvers;
//! the only shared pieces are the input types and the factor split used to
//! name `lm` cells.

use crate::bivincular::BivincularPattern;
use crate::error::{Error, Result};
use crate::factor::factor_decompose;
use crate::perm::{Embedding, Permutation};
use crate::Letter;

pub const MAX_PATTERN: usize = 12;
pub const MAX_TEXT: usize = 40;
pub const MAX_SINGLE: usize = 12;
pub const MAX_PAIR: usize = 8;

fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeGuard { what, got, limit })
    } else {
        Ok(())
    }
}

/// Does the newest entry of `chosen` keep it order-isomorphic to `pattern`'s prefix?
fn extends(pattern: &[u32], chosen: &[u32]) -> bool {
    let last = chosen.len() - 1;
    (0..last).all(|i| (pattern[i] < pattern[last]) == (chosen[i] < chosen[last]))
}

/// Depth-first search over index sequences in lexicographic order; `accept`
/// vets each complete candidate and returning true ends the search. With
/// `pinned` set the first entry is fixed at text position `pinned`.
fn search<F>(
    pattern: &[u32],
    text: &[u32],
    pinned: Option<usize>,
    accept: &mut F,
) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    fn go<F: FnMut(&[usize]) -> bool>(
        pattern: &[u32],
        text: &[u32],
        from: usize,
        to: usize,
        idx: &mut Vec<usize>,
        vals: &mut Vec<u32>,
        accept: &mut F,
    ) -> bool {
        if idx.len() == pattern.len() {
            return accept(idx);
        }
        let need = pattern.len() - idx.len();
        for t in from..to.min((text.len() + 1).saturating_sub(need)) {
            idx.push(t);
            vals.push(text[t]);
            if extends(pattern, vals) && go(pattern, text, t + 1, text.len(), idx, vals, accept) {
                return true;
            }
            idx.pop();
            vals.pop();
        }
        false
    }
    let mut idx = Vec::with_capacity(pattern.len());
    let mut vals = Vec::with_capacity(pattern.len());
    let (from, to) = match pinned {
        Some(j) => (j, j + 1),
        None => (0, text.len()),
    };
    go(pattern, text, from, to, &mut idx, &mut vals, accept).then_some(idx)
}

/// Lexicographically first matching of `pattern` in `text`.
pub fn brute_match(pattern: &Permutation, text: &Permutation) -> Result<Option<Embedding>> {
    guard("pattern length", pattern.len(), MAX_PATTERN)?;
    guard("text length", text.len(), MAX_TEXT)?;
    Ok(search(pattern.values(), text.values(), None, &mut |_| true).map(Embedding::new))
}

/// Checks every bivincular constraint of `pattern` literally on a candidate.
pub fn satisfies_bivincular(
    pattern: &BivincularPattern,
    text: &Permutation,
    idx: &[usize],
) -> bool {
    let bottom = pattern.bottom();
    let k = bottom.len();
    let n = text.len();
    if idx.len() != k || idx.windows(2).any(|w| w[0] >= w[1]) || idx[k - 1] >= n {
        return false;
    }
    let vals: Vec<u32> = idx.iter().map(|&i| text.value(i)).collect();
    if !crate::perm::order_isomorphic(bottom.values(), &vals) {
        return false;
    }
    if pattern.first_anchor() && idx[0] != 0 {
        return false;
    }
    if pattern.last_anchor() && idx[k - 1] != n - 1 {
        return false;
    }
    if pattern
        .pos_adjacent()
        .iter()
        .any(|&i| idx[i] != idx[i - 1] + 1)
    {
        return false;
    }
    // text value matched to pattern value v
    let matched = |v: u32| vals[bottom.values().iter().position(|&x| x == v).unwrap()];
    if pattern
        .val_adjacent()
        .iter()
        .any(|&v| matched(v + 1) != matched(v) + 1)
    {
        return false;
    }
    if pattern.min_anchor() && matched(1) != 1 {
        return false;
    }
    if pattern.max_anchor() && matched(k as u32) != n as u32 {
        return false;
    }
    true
}

/// Lexicographically first matching of a bivincular pattern.
pub fn brute_match_bivincular(
    pattern: &BivincularPattern,
    text: &Permutation,
) -> Result<Option<Embedding>> {
    guard("pattern length", pattern.len(), MAX_PATTERN)?;
    guard("text length", text.len(), MAX_TEXT)?;
    Ok(
        search(pattern.bottom().values(), text.values(), None, &mut |idx| {
            satisfies_bivincular(pattern, text, idx)
        })
        .map(Embedding::new),
    )
}

/// Direct check: no triple of `values` is order-isomorphic to 213 or 231.
pub fn avoids_213_231_brute(values: &[u32]) -> bool {
    let n = values.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (values[a], values[b], values[c]);
                // 213: y < x < z; 231: z < x < y
                if (y < x && x < z) || (z < x && x < y) {
                    return false;
                }
            }
        }
    }
    true
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Length of a longest subsequence of `text` avoiding 213 and 231.
pub fn brute_longest_av(text: &Permutation) -> Result<usize> {
    guard("text length", text.len(), MAX_SINGLE)?;
    Ok(subsets(text.len())
        .filter(|s| {
            let vals: Vec<u32> = s.iter().map(|&i| text.value(i)).collect();
            avoids_213_231_brute(&vals)
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0))
}

/// Length of a longest pattern avoiding 213 and 231 contained in both texts.
pub fn brute_lcs_av(a: &Permutation, b: &Permutation) -> Result<usize> {
    guard("first text length", a.len(), MAX_PAIR)?;
    guard("second text length", b.len(), MAX_PAIR)?;
    let mut best = 0;
    for s in subsets(a.len()) {
        if s.len() <= best {
            continue;
        }
        let vals: Vec<u32> = s.iter().map(|&i| a.value(i)).collect();
        if !avoids_213_231_brute(&vals) {
            continue;
        }
        let pat = Permutation::flatten(&vals)?;
        if search(pat.values(), b.values(), None, &mut |_| true).is_some() {
            best = s.len();
        }
    }
    Ok(best)
}

/// Brute `lm(label, j)`: over every matching of the pattern suffix starting
/// at factor `label`'s leftmost entry that puts that entry on `text[j]`, the
/// smallest maximum (ascent factor) or largest minimum (descent factor).
pub fn brute_lm(
    pattern: &Permutation,
    text: &Permutation,
    label: usize,
    j: usize,
) -> Result<Option<u32>> {
    guard("pattern length", pattern.len(), MAX_PATTERN)?;
    guard("text length", text.len(), MAX_TEXT)?;
    let d = factor_decompose(pattern);
    let kind = d.factor(label).kind;
    let suffix = &pattern.values()[d.lmei(label)..];
    let mut best: Option<u32> = None;
    search(suffix, text.values(), Some(j), &mut |idx| {
        let vals = idx.iter().map(|&i| text.value(i));
        let (extreme, better): (u32, fn(u32, u32) -> bool) = match kind {
            Letter::Ascent => (vals.max().unwrap(), |a, b| a < b),
            Letter::Descent => (vals.min().unwrap(), |a, b| a > b),
        };
        if best.is_none_or(|b| better(extreme, b)) {
            best = Some(extreme);
        }
        false
    });
    Ok(best)
}
