//! k-attractor validation.
//!
//! [`validate_k_attractor`] walks the LCP intervals of the suffix array. All
//! substrings represented by one interval share the same occurrence set, and
//! for a fixed occurrence set coverage is monotone in the substring length,
//! so it suffices to test the shortest represented length per interval with a
//! range-minimum query over the successor distances permuted into SA order.

use std::collections::HashSet;

use crate::attractor::Attractor;
use crate::error::{Error, Result};
use crate::rmq::SparseTable;
use crate::suffix::{succ_distance, SuffixIndex};
use crate::text::Text;

/// A shortest uncovered substring, reported at its leftmost occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub start: usize,
    pub len: usize,
    pub symbols: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid,
    Invalid(Witness),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Validation::Valid => None,
            Validation::Invalid(w) => Some(w),
        }
    }
}

fn check_args(text: &Text, gamma: &Attractor, k: usize) -> Result<()> {
    if gamma.n() != text.len() {
        return Err(Error::LengthMismatch {
            expected: gamma.n(),
            actual: text.len(),
        });
    }
    if k == 0 || k > text.len() {
        return Err(Error::BadK { k, n: text.len() });
    }
    Ok(())
}

/// Decides whether every distinct substring of length `<= k` has an
/// occurrence containing a position of `gamma`.
pub fn validate_k_attractor(text: &Text, gamma: &Attractor, k: usize) -> Result<Validation> {
    check_args(text, gamma, k)?;
    let index = SuffixIndex::build(text)?;
    validate_with_index(text, &index, gamma.positions(), k)
}

/// Same as [`validate_k_attractor`] with a prebuilt suffix index, for callers
/// validating many position sets against one text.
pub fn validate_with_index(
    text: &Text,
    index: &SuffixIndex,
    positions: &[usize],
    k: usize,
) -> Result<Validation> {
    let n = text.len();
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    let d = succ_distance(n, positions)?;
    let sa = index.sa();
    let lcp = index.lcp();
    let permuted: Vec<usize> = sa.iter().map(|&p| d[p - 1]).collect();
    let rmq = SparseTable::new(&permuted);

    // (shortest uncovered length, lb, rb)
    let mut failures: Vec<(usize, usize, usize)> = Vec::new();
    let check =
        |min_len: usize, lb: usize, rb: usize, failures: &mut Vec<(usize, usize, usize)>| {
            if min_len <= k && rmq.min(lb, rb) > min_len - 1 {
                failures.push((min_len, lb, rb));
            }
        };

    // leaves: lengths (parent depth, suffix length]
    for r in 0..n {
        let suffix_len = n - sa[r] + 1;
        let parent = lcp[r].max(if r + 1 < n { lcp[r + 1] } else { 0 });
        if suffix_len > parent {
            check(parent + 1, r, r, &mut failures);
        }
    }

    // internal nodes: bottom-up LCP-interval traversal
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)]; // (depth, lb)
    #[allow(clippy::needless_range_loop)]
    for i in 1..=n {
        let cur = if i < n { lcp[i] } else { 0 };
        let mut lb = i - 1;
        while cur < stack.last().unwrap().0 {
            let (depth, node_lb) = stack.pop().unwrap();
            let parent = cur.max(stack.last().unwrap().0);
            debug_assert!(depth > parent);
            check(parent + 1, node_lb, i - 1, &mut failures);
            lb = node_lb;
        }
        if cur > stack.last().unwrap().0 {
            stack.push((cur, lb));
        }
    }

    let Some(shortest) = failures.iter().map(|f| f.0).min() else {
        return Ok(Validation::Valid);
    };
    let start = failures
        .iter()
        .filter(|f| f.0 == shortest)
        .flat_map(|&(_, lb, rb)| sa[lb..=rb].iter().copied())
        .min()
        .unwrap();
    Ok(Validation::Invalid(Witness {
        start,
        len: shortest,
        symbols: text.slice(start, shortest).to_vec(),
    }))
}

/// Reference validator enumerating every distinct substring and every occurrence.
///
/// Cubic in `n`; intended for `n` up to a few hundred.
pub fn naive_validate(text: &Text, gamma: &Attractor, k: usize) -> Result<Validation> {
    check_args(text, gamma, k)?;
    let s = text.symbols();
    let n = s.len();
    let mut marked = vec![false; n + 2];
    for &g in gamma.positions() {
        marked[g] = true;
    }
    let crosses = |start: usize, len: usize| (start..start + len).any(|p| marked[p]);
    for len in 1..=k {
        let mut seen: HashSet<&[u32]> = HashSet::new();
        for start in 1..=n + 1 - len {
            let sub = &s[start - 1..start - 1 + len];
            if !seen.insert(sub) {
                continue;
            }
            let covered =
                (1..=n + 1 - len).any(|o| &s[o - 1..o - 1 + len] == sub && crosses(o, len));
            if !covered {
                return Ok(Validation::Invalid(Witness {
                    start,
                    len,
                    symbols: sub.to_vec(),
                }));
            }
        }
    }
    Ok(Validation::Valid)
}

/// Fails with [`Error::InvalidAttractor`] naming the witness unless `gamma`
/// is a k-attractor of `text`.
pub fn require_attractor(text: &Text, gamma: &Attractor, k: usize) -> Result<()> {
    match validate_k_attractor(text, gamma, k)? {
        Validation::Valid => Ok(()),
        Validation::Invalid(w) => Err(Error::InvalidAttractor(format!(
            "substring of length {} at position {} has no occurrence crossing the attractor",
            w.len, w.start
        ))),
    }
}

/// Finds, for any substring, the occurrence that contains an attractor
/// position closest to its start (ties to the smallest text position).
#[derive(Debug, Clone)]
pub struct CrossingFinder {
    index: SuffixIndex,
    rmq: SparseTable<(usize, usize)>,
}

impl CrossingFinder {
    pub fn new(text: &Text, positions: &[usize]) -> Result<Self> {
        let index = SuffixIndex::build(text)?;
        let d = succ_distance(text.len(), positions)?;
        let keyed: Vec<(usize, usize)> = index.sa().iter().map(|&p| (d[p - 1], p)).collect();
        Ok(CrossingFinder {
            rmq: SparseTable::new(&keyed),
            index,
        })
    }

    pub fn index(&self) -> &SuffixIndex {
        &self.index
    }

    /// `(start, offset)` of a crossing occurrence of `T[pos..pos+len-1]`:
    /// the attractor position inside it is `start + offset`.
    pub fn find(&self, pos: usize, len: usize) -> Option<(usize, usize)> {
        let range = self.index.interval_of(pos, len);
        let (d, start) = self.rmq.min(range.start, range.end - 1);
        (d < len).then_some((start, d))
    }
}
