//! Exhaustive minimum k-attractor search for tiny texts.

use std::collections::HashMap;

use crate::attractor::Attractor;
use crate::error::{Error, Result};
use crate::text::Text;

/// Largest text the exhaustive search accepts.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// For every distinct substring of length `<= k`, the bitmask of positions
/// lying inside at least one of its occurrences. A position set is a
/// k-attractor iff it hits every mask.
fn coverage_masks(s: &[u32], k: usize) -> Vec<u32> {
    let n = s.len();
    let mut masks: Vec<u32> = Vec::new();
    for len in 1..=k {
        let mut by_sub: HashMap<&[u32], u32> = HashMap::new();
        for start in 0..=n - len {
            let window = ((1u32 << len) - 1) << start;
            *by_sub.entry(&s[start..start + len]).or_insert(0) |= window;
        }
        masks.extend(by_sub.into_values());
    }
    masks.sort_unstable();
    masks.dedup();
    // a mask that contains another one is implied by it
    let mut minimal: Vec<u32> = Vec::new();
    masks.sort_by_key(|m| m.count_ones());
    for m in masks {
        if !minimal.iter().any(|&q| q & !m == 0) {
            minimal.push(m);
        }
    }
    minimal
}

fn distinct_of_length(s: &[u32], len: usize) -> usize {
    let mut subs: Vec<&[u32]> = s.windows(len).collect();
    subs.sort_unstable();
    subs.dedup();
    subs.len()
}

/// Smallest k-attractor, searching sizes upward from the lower bound
/// `max(σ, ⌈σ_k(T)/k⌉)` and subsets of each size in lexicographic order.
/// The first valid subset is returned, so the answer is canonical.
pub fn min_attractor_brute(text: &Text, k: usize) -> Result<Attractor> {
    let n = text.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "exhaustive search needs n <= {BRUTE_FORCE_LIMIT}, got {n}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    let s = text.symbols();
    let masks = coverage_masks(s, k);
    let lower = distinct_of_length(s, 1).max(distinct_of_length(s, k).div_ceil(k));
    for size in lower..=n {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let chosen = pick.iter().fold(0u32, |acc, &p| acc | (1 << p));
            if masks.iter().all(|&m| m & chosen != 0) {
                return Attractor::new(n, k, pick.iter().map(|p| p + 1).collect());
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Err(Error::Internal(
        "the full position set is always an attractor".into(),
    ))
}
