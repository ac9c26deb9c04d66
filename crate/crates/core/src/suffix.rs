//! Suffix array, inverse suffix array, LCP and BWT over a [`Text`].
//!
//! Ranks are 0-based array indices into the suffix array; the values stored
//! in the suffix array are 1-based text positions.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::rmq::SparseTable;
use crate::text::Text;

#[derive(Debug, Clone)]
pub struct SuffixIndex {
    n: usize,
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<usize>,
    bwt: Vec<u32>,
    lcp_rmq: SparseTable<usize>,
}

/// Prefix doubling; suffixes compare as strings, so a proper prefix sorts first.
fn suffix_array(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    // rank + 1, so 0 stands for "past the end"
    let mut rank: Vec<usize> = {
        let mut sorted: Vec<u32> = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        s.iter()
            .map(|c| sorted.binary_search(c).unwrap() + 1)
            .collect()
    };
    let mut tmp = vec![0usize; n];
    let mut h = 1;
    loop {
        let key = |i: usize| (rank[i], if i + h < n { rank[i + h] } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 1;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + usize::from(key(sa[w - 1]) != key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n || h >= n {
            break;
        }
        h *= 2;
    }
    sa
}

/// Kasai et al.
fn lcp_array(s: &[u32], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0; n];
    let mut k = 0usize;
    for i in 0..n {
        let r = rank[i];
        if r == 0 {
            k = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + k < n && j + k < n && s[i + k] == s[j + k] {
            k += 1;
        }
        lcp[r] = k;
        k = k.saturating_sub(1);
    }
    lcp
}

impl SuffixIndex {
    pub fn build(text: &Text) -> Result<Self> {
        let s = text.symbols();
        let n = s.len();
        if n == 0 {
            return Err(Error::EmptyText);
        }
        let sa0 = suffix_array(s);
        let mut rank = vec![0; n];
        for (r, &p) in sa0.iter().enumerate() {
            rank[p] = r;
        }
        let lcp = lcp_array(s, &sa0, &rank);
        // rotation convention: the suffix starting at 1 is preceded by T[n]
        let bwt = sa0
            .iter()
            .map(|&p| if p == 0 { s[n - 1] } else { s[p - 1] })
            .collect();
        let lcp_rmq = SparseTable::new(&lcp);
        let sa = sa0.into_iter().map(|p| p + 1).collect();
        Ok(SuffixIndex {
            n,
            sa,
            rank,
            lcp,
            bwt,
            lcp_rmq,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `sa[r]`: 1-based start of the r-th smallest suffix.
    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    /// Rank of the suffix starting at 1-based position `pos`.
    #[inline]
    pub fn rank_of(&self, pos: usize) -> usize {
        self.rank[pos - 1]
    }

    /// `lcp[r]` = LCP of suffixes of rank `r-1` and `r`; `lcp[0] = 0`.
    pub fn lcp(&self) -> &[usize] {
        &self.lcp
    }

    pub fn bwt(&self) -> &[u32] {
        &self.bwt
    }

    /// Minimum LCP over ranks `[l, r]` inclusive.
    #[inline]
    pub fn lcp_min(&self, l: usize, r: usize) -> usize {
        self.lcp_rmq.min(l, r)
    }

    /// SA interval (half-open, over ranks) of all suffixes prefixed by `pattern`.
    pub fn occurrences(&self, text: &Text, pattern: &[u32]) -> Range<usize> {
        if pattern.is_empty() {
            return 0..self.n;
        }
        let s = text.symbols();
        let prefix = |r: usize| {
            let p = self.sa[r] - 1;
            &s[p..(p + pattern.len()).min(self.n)]
        };
        let search = |below: &dyn Fn(usize) -> bool| {
            let (mut lo, mut hi) = (0, self.n);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if below(mid) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        let l = search(&|r| prefix(r) < pattern);
        let r = search(&|r| prefix(r) <= pattern);
        l..r
    }

    /// 1-based start positions of `pattern`, sorted.
    pub fn occurrence_positions(&self, text: &Text, pattern: &[u32]) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .occurrences(text, pattern)
            .map(|r| self.sa[r])
            .collect();
        v.sort_unstable();
        v
    }

    /// SA interval (half-open) of `T[pos..pos+len-1]`, found from the rank of
    /// `pos` with LCP range-minimum binary searches.
    pub fn interval_of(&self, pos: usize, len: usize) -> Range<usize> {
        debug_assert!(len >= 1 && pos + len - 1 <= self.n);
        let r0 = self.rank_of(pos);
        // leftmost l with min(lcp[l+1..=r0]) >= len
        let (mut lo, mut hi) = (0usize, r0);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.lcp_min(mid + 1, r0) >= len {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let left = lo;
        // rightmost r with min(lcp[r0+1..=r]) >= len
        let (mut lo, mut hi) = (r0, self.n - 1);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.lcp_min(r0 + 1, mid) >= len {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        left..lo + 1
    }
}

/// Distance from each position to the next attractor position at or after it.
///
/// `d[p-1] = min{ g ∈ gamma : g ≥ p } − p`, or `usize::MAX` when none exists.
/// An occurrence of length `l` starting at `p` contains an element of `gamma`
/// exactly when `d[p-1] <= l - 1`.
pub fn succ_distance(n: usize, gamma: &[usize]) -> Result<Vec<usize>> {
    for &g in gamma {
        if g == 0 || g > n {
            return Err(Error::PositionOutOfRange { pos: g, n });
        }
    }
    let mut mark = vec![false; n + 1];
    for &g in gamma {
        mark[g] = true;
    }
    let mut d = vec![usize::MAX; n];
    let mut next: Option<usize> = None;
    for p in (1..=n).rev() {
        if mark[p] {
            next = Some(p);
        }
        if let Some(g) = next {
            d[p - 1] = g - p;
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_sa(s: &[u32]) -> Vec<usize> {
        let mut v: Vec<usize> = (0..s.len()).collect();
        v.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        v.into_iter().map(|p| p + 1).collect()
    }

    fn naive_positions(s: &[u32], p: &[u32]) -> Vec<usize> {
        (0..s.len())
            .filter(|&i| s[i..].starts_with(p))
            .map(|i| i + 1)
            .collect()
    }

    #[test]
    fn abaaba() {
        let t = Text::from_ascii("abaaba").with_sentinel();
        let idx = SuffixIndex::build(&t).unwrap();
        assert_eq!(brute_sa(t.symbols()), vec![7, 6, 3, 4, 1, 5, 2]);
        assert_eq!(idx.sa(), &[7, 6, 3, 4, 1, 5, 2]);
        let aba = Text::from_ascii("ab").symbols().to_vec();
        let pat = vec![aba[0], aba[1], aba[0]];
        assert_eq!(idx.occurrence_positions(&t, &pat), vec![1, 4]);
    }

    #[test]
    fn tiny_and_absent() {
        let t = Text::new(vec![1, 0], 1).unwrap();
        let idx = SuffixIndex::build(&t).unwrap();
        assert_eq!(idx.sa(), &[2, 1]);
        assert!(idx.occurrences(&t, &[2]).is_empty());
    }

    #[test]
    fn banana_bwt() {
        let (t, a) = Text::from_bytes(b"banana").unwrap();
        let t = t.with_sentinel();
        let idx = SuffixIndex::build(&t).unwrap();
        // brute force: sort suffixes, take the preceding symbol
        let sa = brute_sa(t.symbols());
        let bwt: Vec<u32> = sa
            .iter()
            .map(|&p| if p == 1 { t.at(t.len()) } else { t.at(p - 1) })
            .collect();
        assert_eq!(idx.bwt(), &bwt[..]);
        assert_eq!(a.decode(idx.bwt()), b"annb$aa");
    }

    #[test]
    fn example_two_occurrences() {
        let t = Text::from_ascii("CDABCCDABCCA").with_sentinel();
        let idx = SuffixIndex::build(&t).unwrap();
        let cda = &t.symbols()[0..3].to_vec();
        assert_eq!(idx.occurrence_positions(&t, cda), vec![1, 6]);
    }

    #[test]
    fn succ_distance_examples() {
        assert_eq!(
            &succ_distance(12, &[4, 7, 11, 12]).unwrap()[..4],
            &[3, 2, 1, 0]
        );
        assert!(succ_distance(5, &[1, 2, 3, 4, 5])
            .unwrap()
            .iter()
            .all(|&d| d == 0));
        assert_eq!(succ_distance(5, &[5]).unwrap(), vec![4, 3, 2, 1, 0]);
        assert!(succ_distance(5, &[6]).is_err());
        assert_eq!(succ_distance(3, &[1]).unwrap()[1], usize::MAX);
    }

    #[test]
    fn sorted_on_large_text() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s: Vec<u32> = (0..10_000).map(|_| rng.gen_range(1..=3)).collect();
        let t = Text::from_symbols(s).unwrap();
        let idx = SuffixIndex::build(&t).unwrap();
        let s = t.symbols();
        for w in idx.sa().windows(2) {
            assert!(s[w[0] - 1..] < s[w[1] - 1..]);
        }
    }

    proptest! {
        #[test]
        fn sa_lcp_and_occurrences(s in prop::collection::vec(1u32..4, 1..120), p in prop::collection::vec(1u32..4, 1..4)) {
            let t = Text::from_symbols(s.clone()).unwrap();
            let idx = SuffixIndex::build(&t).unwrap();
            prop_assert_eq!(idx.sa(), &brute_sa(&s)[..]);
            for r in 1..s.len() {
                let a = &s[idx.sa()[r - 1] - 1..];
                let b = &s[idx.sa()[r] - 1..];
                let l = a.iter().zip(b).take_while(|(x, y)| x == y).count();
                prop_assert_eq!(idx.lcp()[r], l);
            }
            prop_assert_eq!(idx.occurrence_positions(&t, &p), naive_positions(&s, &p));
        }

        #[test]
        fn interval_of_matches_search(s in prop::collection::vec(1u32..3, 1..80), a in 0usize..80, b in 1usize..6) {
            let t = Text::from_symbols(s.clone()).unwrap();
            let idx = SuffixIndex::build(&t).unwrap();
            let pos = a % s.len() + 1;
            let len = b.min(s.len() - pos + 1);
            let iv = idx.interval_of(pos, len);
            prop_assert_eq!(iv, idx.occurrences(&t, t.slice(pos, len)));
        }
    }
}
