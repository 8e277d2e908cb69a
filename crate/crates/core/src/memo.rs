use std::collections::HashMap;

/// Memo over a mixed-radix key space: a flat array when the space is small,
/// a hash map of reached states otherwise.
#[derive(Debug)]
pub(crate) enum Memo {
    Dense { radix: Vec<usize>, cells: Vec<u32> },
    Sparse { bits: u32, cells: HashMap<u64, u32> },
}

const EMPTY: u32 = u32::MAX;

impl Memo {
    /// Key component `c` ranges over `0..radix[c]`. The table is dense when
    /// the whole key space has at most `dense_limit` entries.
    pub(crate) fn new(radix: Vec<usize>, dense_limit: usize) -> Self {
        let size = radix
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r))
            .unwrap_or(usize::MAX);
        if size <= dense_limit {
            Memo::Dense {
                radix,
                cells: vec![EMPTY; size],
            }
        } else {
            let max = radix.iter().copied().max().unwrap_or(1);
            let bits = usize::BITS - max.leading_zeros();
            assert!(
                bits as usize * radix.len() <= 64,
                "memo key does not fit in 64 bits"
            );
            Memo::Sparse {
                bits,
                cells: HashMap::new(),
            }
        }
    }

    #[inline]
    fn flat(radix: &[usize], key: &[usize]) -> usize {
        debug_assert_eq!(radix.len(), key.len());
        key.iter().zip(radix).fold(0, |acc, (&k, &r)| {
            debug_assert!(k < r);
            acc * r + k
        })
    }

    #[inline]
    fn packed(bits: u32, key: &[usize]) -> u64 {
        key.iter().fold(0u64, |acc, &k| acc << bits | k as u64)
    }

    #[inline]
    pub(crate) fn get(&self, key: &[usize]) -> Option<u32> {
        match self {
            Memo::Dense { radix, cells } => {
                let v = cells[Self::flat(radix, key)];
                (v != EMPTY).then_some(v)
            }
            Memo::Sparse { bits, cells } => cells.get(&Self::packed(*bits, key)).copied(),
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, key: &[usize], value: u32) {
        debug_assert_ne!(value, EMPTY);
        match self {
            Memo::Dense { radix, cells } => cells[Self::flat(radix, key)] = value,
            Memo::Sparse { bits, cells } => {
                cells.insert(Self::packed(*bits, key), value);
            }
        }
    }
}
