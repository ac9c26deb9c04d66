//! Polynomial-time approximations of the minimum k-attractor.
//!
//! Two approximators are provided: greedy set cover over the instance whose
//! universe is the set of distinct substrings of length `<= k` (ratio
//! `H(k(k+1)/2)`), and the leftmost occurrences of the distinct length-`k`
//! substrings of `T·T` (ratio `2k`).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt::Write as _;

use crate::attractor::Attractor;
use crate::error::{Error, Result};
use crate::suffix::SuffixIndex;
use crate::text::Text;

/// Largest `n·k²` accepted by [`k_attractor_greedy`].
pub const GREEDY_WORK_LIMIT: usize = 100_000_000;

/// A collection of subsets of the universe `[1..u]`, each with an identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: u32,
    pub sets: Vec<(u32, Vec<u32>)>,
    pub k_bound: Option<usize>,
}

impl SetCoverInstance {
    /// Checks element ranges, duplicate identifiers and the optional size bound.
    pub fn new(
        universe_size: u32,
        sets: Vec<(u32, Vec<u32>)>,
        k_bound: Option<usize>,
    ) -> Result<Self> {
        let mut ids: Vec<u32> = sets.iter().map(|s| s.0).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadInstance("duplicate set identifier".into()));
        }
        for (id, elems) in &sets {
            if let Some(&e) = elems.iter().find(|&&e| e == 0 || e > universe_size) {
                return Err(Error::BadInstance(format!(
                    "set {id} has element {e} outside [1..{universe_size}]"
                )));
            }
            if let Some(kb) = k_bound {
                if elems.len() > kb {
                    return Err(Error::BadInstance(format!(
                        "set {id} has {} > {kb} elements",
                        elems.len()
                    )));
                }
            }
        }
        Ok(SetCoverInstance {
            universe_size,
            sets,
            k_bound,
        })
    }

    /// Sets numbered `1..=m` in the given order.
    pub fn numbered(universe_size: u32, sets: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(
            universe_size,
            sets.into_iter()
                .enumerate()
                .map(|(i, s)| (i as u32 + 1, s))
                .collect(),
            None,
        )
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.1.len()).max().unwrap_or(0)
    }

    pub fn set(&self, id: u32) -> Option<&[u32]> {
        self.sets.iter().find(|s| s.0 == id).map(|s| &s.1[..])
    }

    /// First uncovered element of `chosen`, if any.
    pub fn uncovered_by(&self, chosen: &[u32]) -> Result<Option<u32>> {
        let mut covered = vec![false; self.universe_size as usize + 1];
        for id in chosen {
            let set = self
                .set(*id)
                .ok_or_else(|| Error::BadInstance(format!("no set with id {id}")))?;
            for &e in set {
                covered[e as usize] = true;
            }
        }
        Ok((1..=self.universe_size).find(|&e| !covered[e as usize]))
    }

    /// `u m`, then `id n_i e_1 … e_{n_i}` per set.
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let head: Vec<usize> = header
            .split_whitespace()
            .map(|f| {
                f.parse()
                    .map_err(|_| Error::parse(lineno + 1, "bad header"))
            })
            .collect::<Result<_>>()?;
        let [u, m] = head[..] else {
            return Err(Error::parse(lineno + 1, "header must be `u m`"));
        };
        let mut sets = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let v: Vec<u32> = line
                .split_whitespace()
                .map(|f| {
                    f.parse()
                        .map_err(|_| Error::parse(lineno + 1, "bad integer"))
                })
                .collect::<Result<_>>()?;
            if v.len() < 2 || v.len() != 2 + v[1] as usize {
                return Err(Error::parse(
                    lineno + 1,
                    "set line must be `id n_i e_1 … e_n_i`",
                ));
            }
            sets.push((v[0], v[2..].to_vec()));
        }
        if sets.len() != m {
            return Err(Error::parse(
                0,
                format!("header announces {m} sets, found {}", sets.len()),
            ));
        }
        Self::new(u as u32, sets, None)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.universe_size, self.sets.len());
        for (id, elems) in &self.sets {
            write!(out, "{id} {}", elems.len()).unwrap();
            for e in elems {
                write!(out, " {e}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// `H(p) = 1 + 1/2 + … + 1/p`.
pub fn harmonic(p: usize) -> f64 {
    (1..=p).map(|i| 1.0 / i as f64).sum()
}

/// Classical greedy: repeatedly take the set covering the most uncovered
/// elements; ties go to the smallest identifier.
pub fn greedy_set_cover(instance: &SetCoverInstance) -> Result<Vec<u32>> {
    let u = instance.universe_size as usize;
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); u + 1];
    let mut gain = Vec::with_capacity(instance.sets.len());
    for (idx, (_, elems)) in instance.sets.iter().enumerate() {
        let mut e = elems.clone();
        e.sort_unstable();
        e.dedup();
        for &x in &e {
            containing[x as usize].push(idx);
        }
        gain.push(e.len());
    }
    if let Some(e) = (1..=u).find(|&e| containing[e].is_empty()) {
        return Err(Error::Uncoverable { element: e as u32 });
    }
    let mut heap: BinaryHeap<(usize, Reverse<u32>, usize)> = instance
        .sets
        .iter()
        .enumerate()
        .map(|(idx, (id, _))| (gain[idx], Reverse(*id), idx))
        .collect();
    let mut covered = vec![false; u + 1];
    let mut remaining = u;
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (g, id, idx) = heap
            .pop()
            .expect("coverable instance always has a useful set");
        if g != gain[idx] {
            if gain[idx] > 0 {
                heap.push((gain[idx], id, idx));
            }
            continue;
        }
        chosen.push(id.0);
        for &x in &instance.sets[idx].1 {
            if !covered[x as usize] {
                covered[x as usize] = true;
                remaining -= 1;
                for &other in &containing[x as usize] {
                    gain[other] -= 1;
                }
            }
        }
    }
    Ok(chosen)
}

/// The set-cover instance whose universe is the distinct substrings of length
/// `<= k` and whose set `i` holds the substrings with an occurrence containing
/// position `i`. Substrings are identified by (SA interval start, length).
pub fn k_attractor_instance(text: &Text, k: usize) -> Result<SetCoverInstance> {
    let n = text.len();
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    if n.saturating_mul(k).saturating_mul(k) > GREEDY_WORK_LIMIT {
        return Err(Error::SizeLimit(format!(
            "n·k² = {n}·{k}² exceeds {GREEDY_WORK_LIMIT}"
        )));
    }
    let index = SuffixIndex::build(text)?;
    let mut ids: HashMap<(usize, usize), u32> = HashMap::new();
    // element id of T[s..s+len-1], stored at [(s-1)*k + len-1]
    let mut element = vec![0u32; n * k];
    for s in 1..=n {
        for len in 1..=k.min(n + 1 - s) {
            let key = (index.interval_of(s, len).start, len);
            let next = ids.len() as u32 + 1;
            element[(s - 1) * k + len - 1] = *ids.entry(key).or_insert(next);
        }
    }
    let mut sets = Vec::with_capacity(n);
    for i in 1..=n {
        let mut set = Vec::new();
        for s in i.saturating_sub(k - 1).max(1)..=i {
            for len in (i - s + 1)..=k.min(n + 1 - s) {
                set.push(element[(s - 1) * k + len - 1]);
            }
        }
        set.sort_unstable();
        set.dedup();
        sets.push((i as u32, set));
    }
    SetCoverInstance::new(ids.len() as u32, sets, None)
}

/// Greedy set-cover approximation of the minimum k-attractor.
pub fn k_attractor_greedy(text: &Text, k: usize) -> Result<Attractor> {
    let instance = k_attractor_instance(text, k)?;
    let chosen = greedy_set_cover(&instance)?;
    Attractor::from_unsorted(text.len(), k, chosen.into_iter().map(|p| p as usize))
}

/// Leftmost start of every distinct length-`k` substring of `T·T`.
///
/// Every such start lies in `[1..n]`: a substring inside the second copy
/// also occurs `n` positions earlier.
pub fn k_attractor_2k(text: &Text, k: usize) -> Result<Attractor> {
    let n = text.len();
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    let squared = text.squared();
    let index = SuffixIndex::build(&squared)?;
    let starts = leftmost_starts(&index, 2 * n, k);
    if let Some(&p) = starts.iter().find(|&&p| p > n) {
        return Err(Error::Internal(format!(
            "leftmost occurrence at {p} > n = {n}"
        )));
    }
    Attractor::from_unsorted(n, k, starts)
}

fn leftmost_starts(index: &SuffixIndex, len: usize, k: usize) -> Vec<usize> {
    let sa = index.sa();
    let lcp = index.lcp();
    let mut starts = Vec::new();
    let mut current: Option<usize> = None;
    for r in 0..len {
        let long_enough = len - sa[r] + 1 >= k;
        if !long_enough {
            continue;
        }
        if r == 0 || lcp[r] < k {
            if let Some(p) = current.take() {
                starts.push(p);
            }
            current = Some(sa[r]);
        } else {
            current = current.map(|p| p.min(sa[r]));
        }
    }
    starts.extend(current);
    starts
}

/// σ_k(T): the number of distinct length-`k` substrings.
pub fn sigma_k(text: &Text, k: usize) -> Result<usize> {
    let n = text.len();
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    let index = SuffixIndex::build(text)?;
    Ok(leftmost_starts(&index, n, k).len())
}

/// `⌈σ_k(T·T)/k⌉ − 1`, a lower bound on the smallest k-attractor of `T`.
pub fn attractor_lower_bound(text: &Text, k: usize) -> Result<usize> {
    if k == 0 || k > text.len() {
        return Err(Error::BadK { k, n: text.len() });
    }
    let sq = sigma_k(&text.squared(), k)?;
    Ok(sq.div_ceil(k).saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::min_attractor_brute;
    use crate::validate::naive_validate;
    use proptest::prelude::*;

    fn brute_cover(instance: &SetCoverInstance) -> usize {
        let m = instance.m();
        (0u32..1 << m)
            .filter(|mask| {
                let ids: Vec<u32> = (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| instance.sets[i].0)
                    .collect();
                instance.uncovered_by(&ids).unwrap().is_none()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn greedy_examples() {
        let inst = SetCoverInstance::numbered(3, vec![vec![1, 2], vec![2, 3], vec![3]]).unwrap();
        let c = greedy_set_cover(&inst).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(brute_cover(&inst), 2);

        let inst = SetCoverInstance::numbered(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(greedy_set_cover(&inst).unwrap(), vec![1]);

        let inst = SetCoverInstance::numbered(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(greedy_set_cover(&inst).unwrap(), vec![1, 2]);

        let inst = SetCoverInstance::numbered(3, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(
            greedy_set_cover(&inst),
            Err(Error::Uncoverable { element: 3 })
        );
    }

    #[test]
    fn instance_checks_and_format() {
        assert!(SetCoverInstance::numbered(2, vec![vec![3]]).is_err());
        assert!(SetCoverInstance::new(2, vec![(1, vec![1, 2])], Some(1)).is_err());
        assert!(SetCoverInstance::new(2, vec![(1, vec![1]), (1, vec![2])], None).is_err());
        let inst = SetCoverInstance::numbered(3, vec![vec![1, 2], vec![2, 3], vec![3]]).unwrap();
        assert_eq!(
            SetCoverInstance::parse(&inst.to_file_string()).unwrap(),
            inst
        );
        assert!(SetCoverInstance::parse("3 2\n1 2 1 2\n").is_err());
        assert!(SetCoverInstance::parse("3 1\n1 3 1 2\n").is_err());
    }

    #[test]
    fn greedy_attractor_examples() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let g = k_attractor_greedy(&t, 3).unwrap();
        assert!(naive_validate(&t, &g, 3).unwrap().is_valid());
        let opt = min_attractor_brute(&t, 3).unwrap().len();
        assert!(g.len() as f64 <= harmonic(6) * opt as f64);

        assert_eq!(
            k_attractor_greedy(&Text::from_ascii("aaaa"), 2)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            k_attractor_greedy(&Text::from_ascii("ab"), 2)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            min_attractor_brute(&Text::from_ascii("ab"), 2)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn two_k_examples() {
        let g = k_attractor_2k(&Text::from_ascii("aaaa"), 2).unwrap();
        assert_eq!(g.positions(), &[1]);
        let t = Text::from_ascii("ab");
        let g = k_attractor_2k(&t, 2).unwrap();
        assert_eq!(g.positions(), &[1, 2]);
        assert!(naive_validate(&t, &g, 2).unwrap().is_valid());

        let t = Text::from_ascii("CDABCCDABCCA");
        let g = k_attractor_2k(&t, 3).unwrap();
        assert!(naive_validate(&t, &g, 3).unwrap().is_valid());
        assert!(g.len() <= 6 * min_attractor_brute(&t, 3).unwrap().len());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(&Text::from_ascii("aaaa"), 2).unwrap(), 1);
        assert_eq!(
            attractor_lower_bound(&Text::from_ascii("aaaa"), 2).unwrap(),
            0
        );
        assert_eq!(sigma_k(&Text::from_ascii("CDABCCDABCCA"), 1).unwrap(), 4);
        assert_eq!(sigma_k(&Text::from_ascii("ab").squared(), 2).unwrap(), 2);
    }

    proptest! {
        #[test]
        fn greedy_within_harmonic_of_optimum(
            u in 1u32..=12,
            raw in prop::collection::vec(prop::collection::vec(1u32..=12, 1..6), 1..=8),
        ) {
            let mut sets: Vec<Vec<u32>> = raw.into_iter().map(|s| {
                let mut s: Vec<u32> = s.into_iter().map(|e| 1 + (e - 1) % u).collect();
                s.sort_unstable();
                s.dedup();
                s
            }).collect();
            // make the instance coverable
            sets.push((1..=u).filter(|e| !sets.iter().any(|s| s.contains(e))).collect());
            sets.retain(|s| !s.is_empty());
            let inst = SetCoverInstance::numbered(u, sets).unwrap();
            let chosen = greedy_set_cover(&inst).unwrap();
            prop_assert!(inst.uncovered_by(&chosen).unwrap().is_none());
            let opt = brute_cover(&inst);
            prop_assert!(chosen.len() as f64 <= harmonic(inst.max_set_size()) * opt as f64 + 1e-9);
        }

        #[test]
        fn sigma_k_matches_enumeration(s in prop::collection::vec(1u32..4, 1..60), k in 1usize..8) {
            let t = Text::from_symbols(s.clone()).unwrap();
            let k = k.min(s.len());
            let mut subs: Vec<&[u32]> = s.windows(k).collect();
            subs.sort_unstable();
            subs.dedup();
            prop_assert_eq!(sigma_k(&t, k).unwrap(), subs.len());
        }
    }
}
