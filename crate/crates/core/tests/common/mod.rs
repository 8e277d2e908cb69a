#![allow(dead_code)]

use avoidmatch::{random_av, Permutation};
use proptest::prelude::*;

/// Every permutation of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation::new(v.clone()).unwrap()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(Permutation::new(v.clone()).unwrap());
    }
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Uniform permutation with length in `lo..=hi`.
pub fn any_perm(lo: usize, hi: usize) -> impl Strategy<Value = Permutation> {
    (lo..=hi)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Uniform member of Av_n(213, 231) with length in `lo..=hi`.
pub fn av_perm(lo: usize, hi: usize) -> impl Strategy<Value = Permutation> {
    (lo..=hi, any::<u64>()).prop_map(|(n, seed)| random_av(n, seed).unwrap())
}
